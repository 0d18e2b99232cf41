#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "mgx/bounds.hpp"
#include "mgx/common.hpp"
#include "mgx/density.hpp"
#include "mgx/multigraph.hpp"

namespace mgx {

struct OracleResult {
    Objective objective = Objective::sum;
    std::int64_t sum_value = 0;
    MultiplicityProfile profile;
    Multigraph witness{0};
    bool exact = true;       // false when the node budget ran out (lower bound only)
    std::uint64_t nodes = 0;
};

namespace detail {

struct OracleProblem {
    int n, s;
    std::int64_t q;
    Objective obj;
    std::uint32_t max_mult;
    int num_edges;
    std::vector<std::vector<int>> sets_of_edge;  // s-sets (by index) through each edge
    std::vector<int> set_edge_count;             // C(s,2) for each set

    OracleProblem(int nn, int ss, std::int64_t qq, Objective o, std::uint32_t mm)
        : n(nn), s(ss), q(qq), obj(o), max_mult(mm), num_edges(static_cast<int>(choose2(nn))) {
        sets_of_edge.assign(num_edges, {});
        std::vector<int> x(s);
        for (int i = 0; i < s; ++i) x[i] = i;
        int set_id = 0;
        while (true) {
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j)
                    sets_of_edge[pair_index(x[i], x[j], n)].push_back(set_id);
            set_edge_count.push_back(static_cast<int>(choose2(s)));
            ++set_id;
            int i = s - 1;
            while (i >= 0 && x[i] == n - s + i) --i;
            if (i < 0) break;
            ++x[i];
            for (int j = i + 1; j < s; ++j) x[j] = x[j - 1] + 1;
        }
    }
};

// One depth-first search over edge multiplicities in lexicographic edge
// order with constraint-propagated caps.  Several workers run disjoint
// subtrees; they share the incumbent value for pruning (which cannot change
// the optimum), and their local results are merged deterministically.
struct OracleWorker {
    const OracleProblem& pr;
    std::atomic<std::int64_t>& shared_best_sum;
    std::atomic<double>& shared_best_log;
    std::atomic<std::uint64_t>& node_counter;
    std::uint64_t budget;
    bool budget_hit = false;

    std::vector<std::uint32_t> assign;
    std::vector<std::int64_t> set_sum;
    std::vector<int> set_unassigned;

    std::int64_t best_sum = -1;
    MultiplicityProfile best_profile;
    bool have = false;
    std::vector<std::uint32_t> best_assign;

    OracleWorker(const OracleProblem& p, std::atomic<std::int64_t>& bs,
                 std::atomic<double>& bl, std::atomic<std::uint64_t>& nc, std::uint64_t bud)
        : pr(p), shared_best_sum(bs), shared_best_log(bl), node_counter(nc), budget(bud) {
        assign.assign(pr.num_edges, 0);
        set_sum.assign(pr.set_edge_count.size(), 0);
        set_unassigned = pr.set_edge_count;
    }

    std::int64_t cap(int e) const {
        std::int64_t c = pr.max_mult;
        for (int sid : pr.sets_of_edge[e]) c = std::min(c, pr.q - set_sum[sid]);
        return c;
    }

    void place(int e, std::uint32_t v) {
        assign[e] = v;
        for (int sid : pr.sets_of_edge[e]) {
            set_sum[sid] += v;
            --set_unassigned[sid];
        }
    }

    void unplace(int e, std::uint32_t v) {
        assign[e] = 0;
        for (int sid : pr.sets_of_edge[e]) {
            set_sum[sid] -= v;
            ++set_unassigned[sid];
        }
    }

    void offer() {
        if (pr.obj == Objective::sum) {
            std::int64_t total = 0;
            for (std::uint32_t v : assign) total += v;
            if (!have || total > best_sum || (total == best_sum && assign < best_assign)) {
                have = true;
                best_sum = total;
                best_assign = assign;
                std::int64_t seen = shared_best_sum.load(std::memory_order_relaxed);
                while (seen < total &&
                       !shared_best_sum.compare_exchange_weak(seen, total,
                                                              std::memory_order_relaxed)) {}
            }
            return;
        }
        MultiplicityProfile prof;
        for (std::uint32_t v : assign) prof.add(v);
        const int cmp = have ? prof.compare(best_profile) : 1;
        if (!have || cmp > 0 || (cmp == 0 && assign < best_assign)) {
            have = true;
            best_profile = prof;
            best_assign = assign;
            const double lg = prof.log_value();
            double seen = shared_best_log.load(std::memory_order_relaxed);
            while (seen < lg &&
                   !shared_best_log.compare_exchange_weak(seen, lg,
                                                          std::memory_order_relaxed)) {}
        }
    }

    // Optimistic bound on the full objective given the first `from` edges.
    bool can_beat(int from) const {
        if (pr.obj == Objective::sum) {
            const std::int64_t incumbent = shared_best_sum.load(std::memory_order_relaxed);
            if (incumbent < 0) return true;
            std::int64_t total = 0;
            for (int e = 0; e < from; ++e) total += assign[e];
            for (int e = from; e < pr.num_edges; ++e) {
                const std::int64_t c = cap(e);
                if (c < 0) return false;
                total += c;
                if (total >= incumbent) return true;
            }
            return total >= incumbent;
        }
        const double incumbent = shared_best_log.load(std::memory_order_relaxed);
        if (incumbent == -std::numeric_limits<double>::infinity()) return true;
        double lg = 0;
        for (int e = 0; e < from; ++e) {
            // a zero edge pins the product to 0; only worth it with no incumbent
            if (assign[e] == 0) return incumbent == -std::numeric_limits<double>::infinity();
            lg += std::log(static_cast<double>(assign[e]));
        }
        // each remaining edge is charged to one covering set; inside a set the
        // product is at most the balanced split of the remaining budget
        std::vector<std::int64_t> extra_count(pr.set_edge_count.size(), 0);
        for (int e = from; e < pr.num_edges; ++e) {
            const std::int64_t c = cap(e);
            if (c < 0) return false;
            if (c == 0) return true;  // forced zero edge: candidate value is 0
            int best_sid = pr.sets_of_edge[e].front();
            for (int sid : pr.sets_of_edge[e])
                if (pr.q - set_sum[sid] < pr.q - set_sum[best_sid]) best_sid = sid;
            ++extra_count[best_sid];
        }
        for (std::size_t sid = 0; sid < extra_count.size(); ++sid) {
            if (extra_count[sid] == 0) continue;
            const std::int64_t budget_left = pr.q - set_sum[sid];
            const AmGmSplit sp = integer_am_gm_max(extra_count[sid],
                                                   std::max<std::int64_t>(budget_left, 0));
            if (sp.base == 0 && sp.count_base > 0) return true;  // zero candidate
            lg += sp.count_base * std::log(static_cast<double>(std::max<std::int64_t>(sp.base, 1))) +
                  sp.count_base_plus_1 * std::log(static_cast<double>(sp.base + 1));
        }
        return lg >= incumbent - 1e-9;
    }

    void dfs(int e) {
        if (node_counter.fetch_add(1, std::memory_order_relaxed) >= budget) {
            budget_hit = true;
            return;
        }
        if (e == pr.num_edges) {
            offer();
            return;
        }
        if (!can_beat(e)) return;
        const std::int64_t c = cap(e);
        if (c < 0) return;
        for (std::int64_t v = c; v >= 0; --v) {
            place(e, static_cast<std::uint32_t>(v));
            if (pr.obj == Objective::product && v == 0) {
                // the product is already 0; the all-zero completion is the
                // lexicographically smallest representative and is feasible
                offer();
            } else {
                dfs(e + 1);
            }
            unplace(e, static_cast<std::uint32_t>(v));
            if (budget_hit) return;
        }
    }
};

}  // namespace detail

// Exhaustive maximization of the total (or product of) edge multiplicities
// over all n-vertex multigraphs in which every s-set spans at most q.  The
// witness is the lexicographically smallest optimal assignment in edge order
// (0,1),(0,2),...  When the node budget runs out the best value found so far
// is returned with exact=false.
inline OracleResult brute_force_extremal(int n, int s, std::int64_t q,
                                         Objective obj = Objective::sum,
                                         std::uint32_t max_mult = 0, int threads = 1,
                                         std::uint64_t budget = 1'000'000'000ULL) {
    if (n < 2 || s < 2 || s > n || q < 0)
        throw input_error("brute_force_extremal: need 2 <= s <= n and q >= 0");
    if (max_mult == 0)
        max_mult = static_cast<std::uint32_t>(
            std::min<std::int64_t>(q, std::numeric_limits<std::uint32_t>::max()));
    const detail::OracleProblem pr(n, s, q, obj, max_mult);
    std::atomic<std::int64_t> shared_sum{-1};
    std::atomic<double> shared_log{-std::numeric_limits<double>::infinity()};
    std::atomic<std::uint64_t> nodes{0};

    // Tasks fix the first edge's multiplicity; workers pull tasks in order.
    const std::int64_t first_cap = std::min<std::int64_t>(max_mult, q);
    const int num_tasks = static_cast<int>(first_cap) + 1;
    std::vector<std::unique_ptr<detail::OracleWorker>> results(num_tasks);
    std::atomic<int> next_task{0};
    auto run = [&]() {
        while (true) {
            const int task = next_task.fetch_add(1);
            if (task >= num_tasks) break;
            auto w = std::make_unique<detail::OracleWorker>(pr, shared_sum, shared_log, nodes,
                                                            budget);
            const auto v = static_cast<std::uint32_t>(first_cap - task);  // descending
            w->place(0, v);
            if (obj == Objective::product && v == 0)
                w->offer();
            else
                w->dfs(1);
            w->unplace(0, v);
            results[task] = std::move(w);
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    OracleResult out;
    out.objective = obj;
    out.nodes = nodes.load();
    std::vector<std::uint32_t> best_assign;
    bool have = false;
    std::int64_t best_sum = -1;
    MultiplicityProfile best_profile;
    bool exact = true;
    for (const auto& w : results) {
        if (!w) continue;
        if (w->budget_hit) exact = false;
        if (!w->have) continue;
        bool take = false;
        if (!have) {
            take = true;
        } else if (obj == Objective::sum) {
            take = w->best_sum > best_sum ||
                   (w->best_sum == best_sum && w->best_assign < best_assign);
        } else {
            const int cmp = w->best_profile.compare(best_profile);
            take = cmp > 0 || (cmp == 0 && w->best_assign < best_assign);
        }
        if (take) {
            have = true;
            best_sum = w->best_sum;
            best_profile = w->best_profile;
            best_assign = w->best_assign;
        }
    }
    if (!have) throw std::logic_error("brute_force_extremal: no assignment found");
    out.exact = exact;
    out.witness = Multigraph(n, best_assign);
    out.sum_value = edge_sum(out.witness);
    out.profile = edge_profile(out.witness);
    return out;
}

}  // namespace mgx
