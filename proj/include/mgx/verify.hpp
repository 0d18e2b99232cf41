#pragma once

// Structured self-verification suite: every check recomputes a published
// closed form or identity from the library primitives and compares against
// the independently stated value.  Used by the acceptance test binary and by
// the `verify` CLI subcommand.

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mgx/admissibility.hpp"
#include "mgx/blowup.hpp"
#include "mgx/bounds.hpp"
#include "mgx/catalog.hpp"
#include "mgx/common.hpp"
#include "mgx/density.hpp"
#include "mgx/oracle.hpp"
#include "mgx/search.hpp"
#include "mgx/turan.hpp"

namespace mgx {

// Pinned numeric tolerances.  Exact checks (rationals / integers) use none.
inline constexpr double kPiTol = 1e-9;        // float density closed forms
inline constexpr double kCrossTol = 1e-9;     // pi <= ln sigma comparison
inline constexpr double kWeightTol = 1e-9;    // optimal weighting entries
inline constexpr double kCountBoundTol = 1e-6;  // vertex-count bound value

struct CheckReport {
    std::string name;
    int criterion = 0;
    std::string status;  // "pass", "fail" or "skipped" (budget overrun)
    std::string detail;  // assertion count, or first mismatch got/want/tol
    double seconds = 0.0;
};

struct CheckOptions {
    std::uint64_t budget = 1'000'000'000ULL;
    int threads = 1;
};

namespace detail {

struct CheckContext {
    CheckOptions opt;
    long assertions = 0;
    bool ok = true;
    std::string first_failure;

    void expect(bool cond, const std::function<std::string()>& describe) {
        ++assertions;
        if (!cond && ok) {
            ok = false;
            first_failure = describe();
        }
    }
    void expect(bool cond, const std::string& describe) {
        expect(cond, [&] { return describe; });
    }
};

inline std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string flt_str(double x) {
    std::ostringstream os;
    os.precision(15);
    os << x;
    return os.str();
}

// ---- criterion 1: exact additive density closed forms --------------------------

inline void check_sigma_closed_forms(CheckContext& c) {
    for (long a = 1; a <= 3; ++a) {
        for (int l = 2; l <= 4; ++l) {
            const Rational want = Rational(a) + Rational(l - 1, 3 * l + 1);
            const Rational got = sigma_density(named_pattern("K1_" + std::to_string(l), a)).sigma;
            c.expect(got == want, [&] {
                return "K1_" + std::to_string(l) + " a=" + std::to_string(a) + ": got " +
                       rat_str(got) + " want " + rat_str(want) + " tol 0";
            });
        }
        for (const std::string& name : {std::string("P4"), std::string("P5")}) {
            const Rational want = Rational(a) + Rational(1, 6);
            const Rational got = sigma_density(named_pattern(name, a)).sigma;
            c.expect(got == want, [&] {
                return name + " a=" + std::to_string(a) + ": got " + rat_str(got) + " want " +
                       rat_str(want) + " tol 0";
            });
        }
        for (int l = 3; l <= 5; ++l) {
            const Rational want = Rational(a) + Rational(1, l);
            const Rational got = sigma_density(named_pattern("C" + std::to_string(l), a)).sigma;
            c.expect(got == want, [&] {
                return "C" + std::to_string(l) + " a=" + std::to_string(a) + ": got " +
                       rat_str(got) + " want " + rat_str(want) + " tol 0";
            });
        }
        for (const auto& [name, graph] : c5_family()) {
            const Rational want = Rational(a) + Rational(1, 5);
            const Rational got = sigma_density(named_pattern(name, a)).sigma;
            c.expect(got == want, [&] {
                return name + " a=" + std::to_string(a) + ": got " + rat_str(got) + " want " +
                       rat_str(want) + " tol 0";
            });
        }
    }
}

// ---- criterion 2: multiplicative density closed forms ---------------------------

inline void check_pi_closed_forms(CheckContext& c) {
    const double ln2 = std::log(2.0), ln3 = std::log(3.0), ln6 = std::log(6.0);
    auto expect_pi = [&](const std::string& name, double want) {
        const double got = pi_density(named_pattern(name, 2)).pi;
        c.expect(std::abs(got - want) <= kPiTol, [&] {
            return name + " a=2: got " + flt_str(got) + " want " + flt_str(want) + " tol 1e-9";
        });
    };
    for (int l = 2; l <= 6; ++l)
        expect_pi("K1_" + std::to_string(l), l * ln3 * ln3 / (2 * l * ln3 - (l - 1) * ln2));
    expect_pi("P4", (ln3 * ln3 + ln2 * ln2 + ln2 * ln3) / (2 * ln6));
    expect_pi("P5", 2 * ln2 * (ln6 * std::log(4.5) - ln3 * std::log(1.5)) /
                        (5 * ln2 * std::log(4.5) - ln6 * std::log(1.5)));
    expect_pi("C6", ln3 / 3 + ln2 / 2);
    const PiResult pet = pi_density(named_pattern("Petersen", 2));
    const double pet_want = ln2 + std::log(27.0 / 16.0) / 10;
    c.expect(std::abs(pet.pi - pet_want) <= kPiTol, [&] {
        return "Petersen a=2: got " + flt_str(pet.pi) + " want " + flt_str(pet_want) +
               " tol 1e-9";
    });
    c.expect(pet.weighting.size() == 10, "Petersen weighting has 10 entries");
    for (double w : pet.weighting)
        c.expect(std::abs(w - 0.1) <= kWeightTol, [&] {
            return "Petersen weighting entry: got " + flt_str(w) + " want 0.1 tol 1e-9";
        });
}

// ---- criterion 3: blow-up edge-sum maxima match the quadratic closed forms ------

inline void check_blowup_closed_forms(CheckContext& c) {
    // extra(s) terms on top of a*C(s,2), all of the form floor((p s^2 + q s)/r).
    struct Family {
        std::string name;
        std::int64_t p, q, r;
    };
    std::vector<Family> fams = {
        {"K1_2", 2 * 1, 14, 28}, {"K1_3", 2 * 2, 20, 40}, {"K1_4", 2 * 3, 26, 52},
        {"P4", 1, 6, 12},        {"P5", 1, 6, 12},        {"C6", 1, 6, 12},
        {"C7", 1, 6, 12},        {"C3", 1, 3, 6},         {"C4", 1, 4, 8},
        {"C5", 1, 5, 10},        {"Pplus2", 1, 2, 4},
    };
    for (const auto& [name, graph] : c5_family()) fams.push_back({name, 1, 5, 10});
    for (long a = 1; a <= 2; ++a)
        for (const Family& f : fams) {
            const Pattern p = named_pattern(f.name, a);
            for (int s = 2; s <= 24; ++s) {
                const std::int64_t extra = (f.p * s * s + f.q * s) / f.r;
                const std::int64_t want = a * choose2(s) + extra;
                const std::int64_t got =
                    optimize_blowup(p, s, Objective::sum, OptMode::exact, c.opt.budget)
                        .sum_value;
                c.expect(got == want, [&] {
                    return f.name + " a=" + std::to_string(a) + " s=" + std::to_string(s) +
                           ": got " + std::to_string(got) + " want " + std::to_string(want) +
                           " tol 0";
                });
            }
        }
}

// ---- criterion 4: layered-pattern growth rates ----------------------------------

inline std::vector<TuranSpec> layered_grid(int max_r, int max_d, long a_span) {
    std::vector<TuranSpec> specs;
    for (int r = 1; r <= max_r; ++r)
        for (long a = 1; a <= a_span; ++a) {
            TuranSpec s;
            s.r = {r};
            s.a = a;
            specs.push_back(s);
        }
    for (int d = 1; d <= max_d; ++d)
        for (int r0 = 1; r0 <= max_r; ++r0)
            for (int rd = 1; rd <= max_r; ++rd)
                for (long a = d + 1; a <= d + a_span; ++a) {
                    TuranSpec s;
                    s.r.assign(d + 1, 0);
                    s.r.front() = r0;
                    s.r.back() = rd;
                    s.a = a;
                    specs.push_back(s);
                }
    return specs;
}

inline void check_turan_growth(CheckContext& c) {
    for (const TuranSpec& spec : layered_grid(3, 3, 10)) {
        const Pattern p = make_turan_pattern(spec);
        std::ostringstream tag_os;
        tag_os << "r=(";
        for (std::size_t i = 0; i < spec.r.size(); ++i)
            tag_os << (i ? "," : "") << spec.r[i];
        tag_os << ") a=" << spec.a;
        const std::string tag = tag_os.str();

        // summed growth increments equal the exhaustive blow-up maximum
        for (int n = 1; n <= 25; ++n) {
            const std::int64_t want =
                optimize_blowup(p, n, Objective::sum, OptMode::exact, c.opt.budget).sum_value;
            const std::int64_t got = turan_sigma_value(spec, n);
            c.expect(got == want, [&] {
                return tag + " n=" + std::to_string(n) + ": got " + std::to_string(got) +
                       " want " + std::to_string(want) + " tol 0";
            });
        }

        const int d = spec.d();
        if (d == 0) continue;
        const int r0 = spec.r.front(), rd = spec.r.back();
        const std::int64_t s0 = turan_s0(spec);
        // strict super-bound on every increment
        for (int n = 1; n <= 3 * s0; ++n) {
            const std::int64_t delta = turan_sigma_value(spec, n + 1) - turan_sigma_value(spec, n);
            const std::int64_t lhs = delta * (s0 - 1);
            const std::int64_t rhs =
                ((spec.a + 1) * (s0 - 1) - (static_cast<std::int64_t>(d) * rd + 1)) * n +
                (s0 - 1);
            c.expect(lhs < rhs, [&] {
                return tag + " increment bound n=" + std::to_string(n) + ": got " +
                       std::to_string(lhs) + " want < " + std::to_string(rhs) + " tol 0";
            });
        }
        // small-range slope bounds on (delta(s') - 1 - a s') / s'
        const std::int64_t k1 = static_cast<std::int64_t>(d) * (rd - 1) + 1;
        const std::int64_t den1 = r0 * k1 + rd - 1;
        for (std::int64_t sp = 2; sp < s0; ++sp) {
            const std::int64_t delta =
                turan_sigma_value(spec, static_cast<int>(sp) + 1) -
                turan_sigma_value(spec, static_cast<int>(sp));
            c.expect((delta - 1 - spec.a * sp) * den1 <= sp * (den1 - k1), [&] {
                return tag + " early slope s'=" + std::to_string(sp) + ": got " +
                       std::to_string(delta) + " exceeds bound, tol 0";
            });
        }
        const std::int64_t k2 = static_cast<std::int64_t>(d) * (2 * rd - 1) + 2;
        const std::int64_t den2 = r0 * k2 + 2 * rd - 1;
        for (std::int64_t sp = s0; sp < 2 * s0 - static_cast<std::int64_t>(d) * r0 - 2; ++sp) {
            const std::int64_t delta =
                turan_sigma_value(spec, static_cast<int>(sp) + 1) -
                turan_sigma_value(spec, static_cast<int>(sp));
            c.expect((delta - 1 - spec.a * sp) * den2 <= sp * (den2 - k2), [&] {
                return tag + " mid slope s'=" + std::to_string(sp) + ": got " +
                       std::to_string(delta) + " exceeds bound, tol 0";
            });
        }
    }
}

// ---- criterion 5: averaging upper bound pinches onto the blow-up value ----------

inline void check_exact_range_pinch(CheckContext& c) {
    for (int d = 1; d <= 2; ++d)
        for (int r0 = 1; r0 <= 2; ++r0)
            for (int rd = 1; rd <= 2; ++rd)
                for (long a = d + 2; a <= d + 6; ++a) {
                    TuranSpec spec;
                    spec.r.assign(d + 1, 0);
                    spec.r.front() = r0;
                    spec.r.back() = rd;
                    spec.a = a;
                    const int s0 = turan_s0(spec);
                    const int n_max = 2 * s0 - d * r0 - 1;
                    const BoundTable t =
                        averaging_propagate(s0, turan_sigma_value(spec, s0), n_max);
                    for (int n = s0; n <= n_max; ++n) {
                        const std::int64_t lower = turan_sigma_value(spec, n);
                        const std::int64_t upper = t.at(n);
                        c.expect(upper == lower, [&] {
                            return "r0=" + std::to_string(r0) + " rd=" + std::to_string(rd) +
                                   " d=" + std::to_string(d) + " a=" + std::to_string(a) +
                                   " n=" + std::to_string(n) + ": got " +
                                   std::to_string(upper) + " want " + std::to_string(lower) +
                                   " tol 0";
                        });
                    }
                }
}

// ---- criterion 6: flat intervals of the multiplicative extremal function --------

inline void check_flat_intervals(CheckContext& c) {
    for (int r = 1; r <= 3; ++r)
        for (long a = 1; a <= 3; ++a) {
            TuranSpec spec;
            spec.r = {r};
            spec.a = a;
            const Pattern p = make_turan_pattern(spec);
            const double pi_value = std::exp(pi_density(p).pi);
            for (int s = 2 * r + 1; s <= 2 * r + 6; ++s) {
                const std::string tag =
                    "r=" + std::to_string(r) + " a=" + std::to_string(a) +
                    " s=" + std::to_string(s);
                const FlatInterval f = flat_interval(r, a, s);
                const std::int64_t sigma_s = turan_sigma_value(spec, s);
                c.expect(f.q_low == sigma_s, [&] {
                    return tag + " q_low: got " + std::to_string(f.q_low) + " want " +
                           std::to_string(sigma_s) + " tol 0";
                });
                c.expect(f.q_high == f.q_low + (s - 1) / r - 1, [&] {
                    return tag + " q_high: got " + std::to_string(f.q_high) + " tol 0";
                });
                c.expect(std::abs(f.value - pi_value) <= kPiTol, [&] {
                    return tag + " value: got " + flt_str(f.value) + " want " +
                           flt_str(pi_value) + " tol 1e-9";
                });
                // floor-recurrence induction: the propagated upper bound stays
                // within the additive slack band above the blow-up value
                const BoundTable t = averaging_propagate(s, f.q_high, 200);
                for (int n = s; n <= 200; ++n) {
                    const std::int64_t lo = turan_sigma_value(spec, n);
                    const std::int64_t hi = lo + (n - 1) / r - 1;
                    c.expect(a * choose2(n) <= lo && lo <= t.at(n) && t.at(n) <= hi, [&] {
                        return tag + " n=" + std::to_string(n) + ": got " +
                               std::to_string(t.at(n)) + " want in [" + std::to_string(lo) +
                               "," + std::to_string(hi) + "] tol 0";
                    });
                }
            }
        }
}

// ---- criterion 7: polynomial gate and its analytic equivalents -----------------

inline void check_large_a_gate(CheckContext& c) {
    for (int d = 1; d <= 4; ++d)
        for (int rd = 1; rd <= 4; ++rd) {
            const std::int64_t threshold = gate_threshold(rd, d);
            if (rd == 1)
                c.expect(threshold == static_cast<std::int64_t>(d) * d + d, [&] {
                    return "threshold rd=1 d=" + std::to_string(d) + ": got " +
                           std::to_string(threshold) + " want " + std::to_string(d * d + d) +
                           " tol 0";
                });
            for (int r0 = 1; r0 <= 4; ++r0)
                for (long a = d + 1; a <= threshold + 5; ++a) {
                    const GateResult g = large_a_gate(r0, rd, d, a);
                    const std::string tag = "r0=" + std::to_string(r0) +
                                            " rd=" + std::to_string(rd) +
                                            " d=" + std::to_string(d) +
                                            " a=" + std::to_string(a);
                    c.expect(g.threshold == threshold, [&] { return tag + " threshold"; });
                    if (!g.boundary_b)
                        c.expect(g.gate == g.equiv_b, [&] {
                            return tag + ": got gate=" + std::to_string(g.gate) +
                                   " want block-count form " + std::to_string(g.equiv_b);
                        });
                    if (!g.boundary_c)
                        c.expect(g.gate == g.equiv_c, [&] {
                            return tag + ": got gate=" + std::to_string(g.gate) +
                                   " want weight form " + std::to_string(g.equiv_c);
                        });
                    if (a > threshold)
                        c.expect(g.gate, [&] { return tag + ": gate must hold above threshold"; });
                }
        }
}

// ---- criterion 8: balanced degrees in the edge-sum-optimal blow-up --------------

inline void check_heavy_degree(CheckContext& c) {
    const int shapes[3][3] = {{1, 1, 1}, {2, 1, 1}, {1, 1, 2}};
    for (const auto& sh : shapes) {
        TuranSpec spec;
        spec.r.assign(sh[2] + 1, 0);
        spec.r.front() = sh[0];
        spec.r.back() = sh[1];
        spec.a = sh[2] + 2;
        c.expect(heavy_degree_check(spec, c.opt.budget), [&] {
            return "r0=" + std::to_string(sh[0]) + " rd=" + std::to_string(sh[1]) +
                   " d=" + std::to_string(sh[2]) + ": degrees not all equal to closed form";
        });
    }
}

// ---- criterion 9: exhaustive-search ground truth --------------------------------

inline void check_oracle_uniform(CheckContext& c) {
    for (int s : {3, 4})
        for (long a : {1L, 2L})
            for (int n = s; n <= 5; ++n) {
                const std::int64_t q = a * choose2(s);
                const std::string tag = "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                        " a=" + std::to_string(a);
                const OracleResult sum = brute_force_extremal(n, s, q, Objective::sum, 0,
                                                              c.opt.threads, c.opt.budget);
                if (!sum.exact) throw budget_error("oracle budget exhausted");
                c.expect(sum.sum_value == a * choose2(n), [&] {
                    return tag + " sum: got " + std::to_string(sum.sum_value) + " want " +
                           std::to_string(a * choose2(n)) + " tol 0";
                });
                const OracleResult prod = brute_force_extremal(n, s, q, Objective::product, 0,
                                                               c.opt.threads, c.opt.budget);
                if (!prod.exact) throw budget_error("oracle budget exhausted");
                BigInt want = 1;
                for (std::int64_t i = 0; i < choose2(n); ++i) want *= a;
                c.expect(prod.profile.product() == want, [&] {
                    std::ostringstream os;
                    os << tag << " product: got " << prod.profile.product() << " want " << want
                       << " tol 0";
                    return os.str();
                });
            }
}

inline void check_oracle_c5_witness(CheckContext& c) {
    const OracleResult r = brute_force_extremal(5, 4, 15, Objective::product, 0, c.opt.threads,
                                                c.opt.budget);
    if (!r.exact) throw budget_error("oracle budget exhausted");
    // a two-class construction (5-cycle edges one above ambient, chords at
    // ambient) achieves 3^5 * 2^5 = 7776; the optimum must reach it
    const Pattern c5 = named_pattern("C5", 2);
    const MultiplicityProfile blowup = blowup_profile(c5, Composition(5, 1));
    c.expect(blowup.product() >= 5832, "two-class construction value");
    c.expect(r.profile.compare(blowup) >= 0, [&] {
        std::ostringstream os;
        os << "got " << r.profile.product() << " want >= " << blowup.product() << " tol 0";
        return os.str();
    });
    c.expect(r.profile.product() == blowup.product(),
             "optimum equals the cycle-pattern blow-up value");
    const SqCheckResult sq = is_sq_graph(r.witness, 4, 15);
    c.expect(sq.ok, "witness violates the 4-set budget");
    c.expect(edge_profile(r.witness).product() == r.profile.product(),
             "witness product mismatch");
}

inline void check_oracle_monotonicity(CheckContext& c) {
    // densities ex_S(n)/C(n,2) and ex_P(n)^(1/C(n,2)) are non-increasing in n
    for (int s : {3, 4})
        for (long a : {1L, 2L}) {
            const std::int64_t q = a * choose2(s);
            std::int64_t prev_sum = 0;
            double prev_log = 0.0;
            for (int n = s; n <= 5; ++n) {
                const OracleResult sum = brute_force_extremal(n, s, q, Objective::sum, 0,
                                                              c.opt.threads, c.opt.budget);
                const OracleResult prod = brute_force_extremal(n, s, q, Objective::product, 0,
                                                               c.opt.threads, c.opt.budget);
                if (!sum.exact || !prod.exact) throw budget_error("oracle budget exhausted");
                const std::string tag = "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                        " a=" + std::to_string(a);
                if (n > s) {
                    c.expect(sum.sum_value * choose2(n - 1) <= prev_sum * choose2(n), [&] {
                        return tag + ": additive density increased with n";
                    });
                    c.expect(prod.profile.log_value() / static_cast<double>(choose2(n)) <=
                                 prev_log / static_cast<double>(choose2(n - 1)) + 1e-12,
                             [&] { return tag + ": geometric density increased with n"; });
                }
                prev_sum = sum.sum_value;
                prev_log = prod.profile.log_value();
            }
        }
}

// ---- criterion 10: the 10-vertex cubic girth-5 graph pipeline -------------------

inline void check_petersen_pipeline(CheckContext& c) {
    const auto graphs = enumerate_graphs(10, 3, 5, true);
    int cubic = 0;
    for (const SimpleGraph& g : graphs)
        if (g.edge_count() == 15) {
            ++cubic;
            c.expect(isomorphic(g, petersen_graph()), "cubic candidate not the expected graph");
        }
    c.expect(cubic == 1, [&] {
        return "cubic girth-5 graphs on 10 vertices: got " + std::to_string(cubic) +
               " want 1 tol 0";
    });

    SurveyOptions so;
    so.s = 20;
    so.a = 2;
    so.objective = Objective::product;
    so.budget = c.opt.budget;
    const std::int64_t q_from =
        optimize_blowup(named_pattern("K1_3", 2), so.s, Objective::sum).sum_value;
    const std::int64_t q_to =
        optimize_blowup(named_pattern("K1_4", 2), so.s, Objective::sum).sum_value - 1;
    const double want = std::log(2.0) + std::log(27.0 / 16.0) / 10;
    const std::string pet = canonical_string(petersen_graph());
    for (const SurveyRow& row : survey(so, q_from, q_to)) {
        c.expect(row.witness == pet, [&] {
            return "q=" + std::to_string(row.q) + ": got witness " + row.witness;
        });
        c.expect(row.tie_count == 1, [&] {
            return "q=" + std::to_string(row.q) + ": got " + std::to_string(row.tie_count) +
                   " tied maximisers, want 1";
        });
        c.expect(std::abs(row.best_density - want) <= kPiTol, [&] {
            return "q=" + std::to_string(row.q) + ": got " + flt_str(row.best_density) +
                   " want " + flt_str(want) + " tol 1e-9";
        });
    }

    const double bound = vertex_count_bound(petersen_graph(), 2, Objective::product);
    c.expect(std::abs(bound - 10.0) <= kCountBoundTol, [&] {
        return "vertex-count bound: got " + flt_str(bound) + " want 10 tol 1e-6";
    });
}

// ---- criterion 11: cross-law and cloning invariance ------------------------------

inline void check_cross_law(CheckContext& c) {
    std::vector<std::pair<std::string, long>> touched;
    for (long a = 1; a <= 3; ++a) {
        for (int l = 2; l <= 4; ++l) touched.emplace_back("K1_" + std::to_string(l), a);
        touched.emplace_back("P4", a);
        touched.emplace_back("P5", a);
        for (int l = 3; l <= 5; ++l) touched.emplace_back("C" + std::to_string(l), a);
        for (const auto& [name, graph] : c5_family()) touched.emplace_back(name, a);
    }
    for (int l = 2; l <= 6; ++l) touched.emplace_back("K1_" + std::to_string(l), 2);
    touched.emplace_back("C6", 2);
    for (const auto& [name, a] : touched) {
        const Pattern p = named_pattern(name, a);
        const double pi = pi_density(p).pi;
        const double ln_sigma = std::log(rational_to_double(sigma_density(p).sigma));
        c.expect(pi <= ln_sigma + kCrossTol, [&] {
            return name + " a=" + std::to_string(a) + ": got pi=" + flt_str(pi) +
                   " want <= ln sigma=" + flt_str(ln_sigma) + " tol 1e-9";
        });
    }
}

inline void check_clone_reduction(CheckContext& c) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const std::uint32_t loop = rng() % 6;
        std::vector<std::uint32_t> loops(k, loop);
        std::vector<std::uint32_t> pairs(static_cast<std::size_t>(choose2(k)));
        for (std::uint32_t& m : pairs) m = rng() % 6;
        const Pattern p(loops, pairs);
        const Rational before = sigma_density(p).sigma;
        const Rational after = sigma_density(clone_reduce(p, Objective::sum)).sigma;
        c.expect(before == after, [&] {
            return "trial " + std::to_string(trial) + ": got " + rat_str(after) + " want " +
                   rat_str(before) + " tol 0";
        });
    }
}

}  // namespace detail

struct CheckSpec {
    std::string name;
    int criterion;
    void (*fn)(detail::CheckContext&);
};

inline const std::vector<CheckSpec>& paper_checks() {
    static const std::vector<CheckSpec> checks = {
        {"sigma-closed-forms", 1, detail::check_sigma_closed_forms},
        {"pi-closed-forms", 2, detail::check_pi_closed_forms},
        {"blowup-closed-forms", 3, detail::check_blowup_closed_forms},
        {"turan-growth", 4, detail::check_turan_growth},
        {"exact-range-pinch", 5, detail::check_exact_range_pinch},
        {"flat-intervals", 6, detail::check_flat_intervals},
        {"large-a-gate", 7, detail::check_large_a_gate},
        {"heavy-degree", 8, detail::check_heavy_degree},
        {"oracle-uniform", 9, detail::check_oracle_uniform},
        {"oracle-two-class-witness", 9, detail::check_oracle_c5_witness},
        {"oracle-monotonicity", 9, detail::check_oracle_monotonicity},
        {"petersen-pipeline", 10, detail::check_petersen_pipeline},
        {"cross-law", 11, detail::check_cross_law},
        {"clone-reduction", 11, detail::check_clone_reduction},
    };
    return checks;
}

inline std::vector<CheckReport> run_checks(const std::string& only = "",
                                           const CheckOptions& opt = {}) {
    std::vector<CheckReport> reports;
    for (const CheckSpec& spec : paper_checks()) {
        if (!only.empty() && spec.name != only) continue;
        CheckReport rep;
        rep.name = spec.name;
        rep.criterion = spec.criterion;
        detail::CheckContext ctx;
        ctx.opt = opt;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            spec.fn(ctx);
            rep.status = ctx.ok ? "pass" : "fail";
            rep.detail = ctx.ok ? std::to_string(ctx.assertions) + " assertions"
                                : ctx.first_failure;
        } catch (const budget_error& e) {
            rep.status = "skipped";
            rep.detail = e.what();
        } catch (const std::exception& e) {
            rep.status = "fail";
            rep.detail = std::string("exception: ") + e.what();
        }
        rep.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        reports.push_back(std::move(rep));
    }
    if (reports.empty()) throw input_error("no check named '" + only + "'");
    return reports;
}

}  // namespace mgx
