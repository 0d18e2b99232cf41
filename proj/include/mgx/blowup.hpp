#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "mgx/common.hpp"
#include "mgx/density.hpp"
#include "mgx/multigraph.hpp"
#include "mgx/pattern.hpp"

namespace mgx {

// Part sizes of a blow-up, one entry per pattern vertex.
using Composition = std::vector<int>;

inline Multigraph build_blowup(const Pattern& p, const Composition& c) {
    if (static_cast<int>(c.size()) != p.k())
        throw input_error("build_blowup: composition size mismatch");
    int n = 0;
    std::vector<int> owner;
    for (int u = 0; u < p.k(); ++u) {
        if (c[u] < 0) throw input_error("build_blowup: negative part size");
        n += c[u];
        owner.insert(owner.end(), c[u], u);
    }
    std::vector<std::uint32_t> w(choose2(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            w[pair_index(x, y, n)] = p.entry(owner[x], owner[y]);
    return Multigraph(n, std::move(w));
}

inline std::int64_t blowup_sum(const Pattern& p, const Composition& c) {
    std::int64_t s = 0;
    for (int u = 0; u < p.k(); ++u) {
        s += static_cast<std::int64_t>(p.loop(u)) * choose2(c[u]);
        for (int v = u + 1; v < p.k(); ++v)
            s += static_cast<std::int64_t>(p.pair(u, v)) * c[u] * c[v];
    }
    return s;
}

inline MultiplicityProfile blowup_profile(const Pattern& p, const Composition& c) {
    MultiplicityProfile prof;
    for (int u = 0; u < p.k(); ++u) {
        prof.add(p.loop(u), choose2(c[u]));
        for (int v = u + 1; v < p.k(); ++v)
            prof.add(p.pair(u, v), static_cast<std::int64_t>(c[u]) * c[v]);
    }
    return prof;
}

enum class OptMode { exact, local };

struct BlowupOptimum {
    Objective objective = Objective::sum;
    std::int64_t sum_value = 0;      // additive objective value
    MultiplicityProfile profile;     // multiplicities of the optimum (both objectives)
    Composition witness;
    bool exact = false;              // true: proven optimal; false: local optimum only
    std::uint64_t nodes = 0;
};

namespace detail {

// Vertex classes whose members can be permuted without changing the pattern;
// the optimizer only visits compositions that are non-decreasing inside each
// class, which is also where the lexicographically smallest optimum lives.
inline std::vector<std::vector<int>> interchangeable_classes(const Pattern& p) {
    const int k = p.k();
    std::vector<std::vector<int>> classes;
    std::vector<int> cls(k, -1);
    auto same = [&](int u, int v) {
        if (p.loop(u) != p.loop(v)) return false;
        for (int w = 0; w < k; ++w)
            if (w != u && w != v && p.pair(u, w) != p.pair(v, w)) return false;
        return true;
    };
    for (int u = 0; u < k; ++u) {
        if (cls[u] >= 0) continue;
        std::vector<int> group{u};
        cls[u] = static_cast<int>(classes.size());
        for (int v = u + 1; v < k; ++v) {
            if (cls[v] >= 0 || !same(u, v)) continue;
            // the whole group must stay mutually interchangeable
            bool ok = true;
            for (int g : group)
                if (g != u && !same(g, v)) { ok = false; break; }
            if (ok) {
                cls[v] = cls[u];
                group.push_back(v);
            }
        }
        classes.push_back(group);
    }
    return classes;
}

struct ExactSearch {
    const Pattern& p;
    int n;
    Objective obj;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    // per-vertex class bookkeeping: previous member of the same class, and the
    // number of later members (used for the ascending-size constraint)
    std::vector<int> prev_in_class, later_in_class;
    // suffix maxima used by the relaxation bound
    std::vector<std::int64_t> max_entry_suffix;
    std::vector<double> max_log_suffix;

    Composition cur;
    std::vector<std::int64_t> cross;    // cross[t] = sum_{i<pos} pair(i,t)*c_i
    std::vector<double> cross_log;      // log version (-inf when blocked)

    std::int64_t best_sum = std::numeric_limits<std::int64_t>::min();
    MultiplicityProfile best_profile;
    double best_log = -std::numeric_limits<double>::infinity();
    Composition best_witness;
    bool have = false;

    explicit ExactSearch(const Pattern& pat, int nn, Objective o, std::uint64_t bud)
        : p(pat), n(nn), obj(o), budget(bud) {
        const int k = p.k();
        prev_in_class.assign(k, -1);
        later_in_class.assign(k, 0);
        for (const auto& group : interchangeable_classes(p))
            for (std::size_t i = 0; i < group.size(); ++i) {
                if (i > 0) prev_in_class[group[i]] = group[i - 1];
                later_in_class[group[i]] = static_cast<int>(group.size() - 1 - i);
            }
        max_entry_suffix.assign(k + 1, 0);
        max_log_suffix.assign(k + 1, -std::numeric_limits<double>::infinity());
        for (int j = k - 1; j >= 0; --j) {
            std::int64_t m = max_entry_suffix[j + 1];
            for (int t = j; t < k; ++t) m = std::max<std::int64_t>(m, p.entry(j, t));
            max_entry_suffix[j] = m;
            max_log_suffix[j] = m > 0 ? std::log(static_cast<double>(m))
                                      : -std::numeric_limits<double>::infinity();
        }
        cur.assign(k, 0);
        cross.assign(k, 0);
        cross_log.assign(k, 0.0);
    }

    void offer(std::int64_t sum_value) {
        if (obj == Objective::sum) {
            if (!have || sum_value > best_sum ||
                (sum_value == best_sum && cur < best_witness)) {
                have = true;
                best_sum = sum_value;
                best_witness = cur;
            }
            return;
        }
        MultiplicityProfile prof = blowup_profile(p, cur);
        const int cmp = have ? prof.compare(best_profile) : 1;
        if (!have || cmp > 0 || (cmp == 0 && cur < best_witness)) {
            have = true;
            best_profile = std::move(prof);
            best_log = best_profile.log_value();
            best_witness = cur;
        }
    }

    // Upper bound on what the unassigned suffix (vertices pos..k-1 holding m
    // clones) can still contribute, given the cross coefficients.
    bool can_beat_sum(int pos, int m, std::int64_t fixed) const {
        if (!have) return true;
        std::int64_t cmax = std::numeric_limits<std::int64_t>::min();
        for (int t = pos; t < p.k(); ++t) cmax = std::max(cmax, cross[t]);
        const std::int64_t ub = fixed + static_cast<std::int64_t>(m) * std::max<std::int64_t>(cmax, 0) +
                                max_entry_suffix[pos] * choose2(m);
        return ub >= best_sum;
    }

    bool can_beat_log(int pos, int m, double fixed_log) const {
        if (!have || best_log == -std::numeric_limits<double>::infinity()) return true;
        double cmax = -std::numeric_limits<double>::infinity();
        for (int t = pos; t < p.k(); ++t) cmax = std::max(cmax, cross_log[t]);
        if (m > 0 && cmax == -std::numeric_limits<double>::infinity()) return false;
        const double ub = fixed_log + (m > 0 ? m * cmax : 0.0) +
                          (m >= 2 ? choose2(m) * max_log_suffix[pos] : 0.0);
        return ub >= best_log - 1e-6;
    }

    void dfs(int pos, int m, std::int64_t fixed, double fixed_log) {
        if (++nodes > budget)
            throw budget_error("optimize_blowup: node budget exhausted");
        const int k = p.k();
        if (pos == k) {
            if (m == 0) offer(fixed);
            return;
        }
        if (obj == Objective::sum) {
            if (!can_beat_sum(pos, m, fixed)) return;
        } else {
            if (!can_beat_log(pos, m, fixed_log)) return;
        }
        const int lo = prev_in_class[pos] >= 0 ? cur[prev_in_class[pos]] : 0;
        int hi = m;
        if (later_in_class[pos] > 0) hi = m / (later_in_class[pos] + 1);
        for (int c = hi; c >= lo; --c) {
            cur[pos] = c;
            const std::int64_t add = cross[pos] * c +
                                     static_cast<std::int64_t>(p.loop(pos)) * choose2(c);
            double add_log = 0.0;
            if (obj == Objective::product && c > 0) {
                add_log = cross_log[pos] * c;
                if (c >= 2) {
                    add_log += p.loop(pos) == 0
                                   ? -std::numeric_limits<double>::infinity()
                                   : choose2(c) * std::log(static_cast<double>(p.loop(pos)));
                }
            }
            std::vector<std::int64_t> saved_cross(cross.begin() + pos + 1, cross.end());
            std::vector<double> saved_cross_log(cross_log.begin() + pos + 1, cross_log.end());
            if (c > 0)
                for (int t = pos + 1; t < k; ++t) {
                    const std::uint32_t e = p.pair(pos, t);
                    cross[t] += static_cast<std::int64_t>(e) * c;
                    cross_log[t] += e == 0 ? -std::numeric_limits<double>::infinity()
                                           : c * std::log(static_cast<double>(e));
                }
            dfs(pos + 1, m - c, fixed + add, fixed_log + add_log);
            std::copy(saved_cross.begin(), saved_cross.end(), cross.begin() + pos + 1);
            std::copy(saved_cross_log.begin(), saved_cross_log.end(), cross_log.begin() + pos + 1);
        }
        cur[pos] = 0;
    }
};

// Hill climbing over single-clone moves from a rounded optimal weighting.
inline Composition local_composition(const Pattern& p, int n, Objective obj) {
    const int k = p.k();
    std::vector<double> x(k, 1.0 / k);
    try {
        if (obj == Objective::sum) {
            const SigmaResult r = sigma_density(p);
            for (int i = 0; i < k; ++i) x[i] = rational_to_double(r.weighting[i]);
        } else {
            const PiResult r = pi_density(p);
            if (!r.minus_infinity && !r.weighting.empty()) x = r.weighting;
        }
    } catch (const input_error&) {
        // fall back to the uniform start for oversized patterns
    }
    Composition c(k, 0);
    int used = 0;
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<int>(std::floor(x[i] * n));
        used += c[i];
    }
    // distribute the remainder by largest fractional part
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return x[a] * n - std::floor(x[a] * n) > x[b] * n - std::floor(x[b] * n);
    });
    for (int i = 0; used < n; ++i, ++used) ++c[order[i % k]];

    auto better = [&](const Composition& lhs, const Composition& rhs) {
        if (obj == Objective::sum) return blowup_sum(p, lhs) > blowup_sum(p, rhs);
        return blowup_profile(p, lhs).compare(blowup_profile(p, rhs)) > 0;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        Composition best = c;
        for (int i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                Composition t = c;
                --t[i];
                ++t[j];
                if (better(t, best)) {
                    best = t;
                    improved = true;
                }
            }
        }
        c = best;
    }
    return c;
}

}  // namespace detail

// Maximizes the additive or multiplicative weight of an n-clone blow-up of
// the pattern.  In exact mode a branch-and-bound over part compositions is
// run (seeded by the local optimum) and the witness returned is the
// lexicographically smallest optimal composition; local mode returns the
// hill-climbing result only.
inline BlowupOptimum optimize_blowup(const Pattern& p, int n, Objective obj,
                                     OptMode mode = OptMode::exact,
                                     std::uint64_t budget = 1'000'000'000ULL) {
    if (n < 0) throw input_error("optimize_blowup: negative n");
    BlowupOptimum out;
    out.objective = obj;
    const Composition seed = detail::local_composition(p, n, obj);
    if (mode == OptMode::local) {
        out.witness = seed;
        out.sum_value = blowup_sum(p, seed);
        out.profile = blowup_profile(p, seed);
        out.exact = false;
        return out;
    }
    detail::ExactSearch search(p, n, obj, budget);
    // Seed the incumbent so the relaxation bound prunes from the start; the
    // seed competes for the lexicographic tie-break like any other optimum.
    search.cur = seed;
    search.offer(blowup_sum(p, seed));
    search.cur.assign(p.k(), 0);
    search.dfs(0, n, 0, 0.0);
    out.witness = search.best_witness;
    out.sum_value = blowup_sum(p, out.witness);
    out.profile = blowup_profile(p, out.witness);
    out.exact = true;
    out.nodes = search.nodes;
    return out;
}

}  // namespace mgx
