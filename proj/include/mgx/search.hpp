#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "mgx/blowup.hpp"
#include "mgx/catalog.hpp"
#include "mgx/common.hpp"
#include "mgx/density.hpp"
#include "mgx/graph.hpp"

namespace mgx {

// One representative per isomorphism class of simple graphs on exactly n
// vertices with maximum degree and girth constraints (girth of a forest
// passes every constraint).  Graphs are grown one vertex at a time; every
// constrained graph arises this way because vertex deletion preserves both
// constraints.  Deduplication is by canonical form at every level.
inline std::vector<SimpleGraph> enumerate_graphs(int n, int max_degree, int min_girth,
                                                 bool connected_only) {
    if (n < 1 || n > 11) throw input_error("enumerate_graphs: n must be in 1..11");
    if (max_degree < 0 || min_girth < 3)
        throw input_error("enumerate_graphs: bad degree or girth constraint");
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<SimpleGraph> next;
        std::unordered_set<std::string> seen;
        for (const SimpleGraph& g : level) {
            // pairwise distances, used to bound the girth of extensions
            std::vector<std::vector<int>> dist(k, std::vector<int>(k, 1 << 20));
            for (int src = 0; src < k; ++src) {
                dist[src][src] = 0;
                std::vector<int> queue{src};
                for (std::size_t h = 0; h < queue.size(); ++h)
                    for (int v = 0; v < k; ++v)
                        if (g.has_edge(queue[h], v) && dist[src][v] > dist[src][queue[h]] + 1) {
                            dist[src][v] = dist[src][queue[h]] + 1;
                            queue.push_back(v);
                        }
            }
            for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
                if (__builtin_popcount(nb) > max_degree) continue;
                bool ok = true;
                std::vector<int> picks;
                for (int v = 0; v < k && ok; ++v)
                    if ((nb >> v) & 1u) {
                        if (g.degree(v) + 1 > max_degree) ok = false;
                        picks.push_back(v);
                    }
                // a new vertex joined to u and v closes a cycle of length
                // dist(u,v) + 2
                for (std::size_t i = 0; i < picks.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < picks.size() && ok; ++j)
                        if (dist[picks[i]][picks[j]] + 2 < min_girth) ok = false;
                if (!ok) continue;
                SimpleGraph h(k + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v : picks) h.add_edge(v, k);
                if (seen.insert(canonical_string(h)).second) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    if (connected_only) {
        std::vector<SimpleGraph> out;
        for (const SimpleGraph& g : level)
            if (g.connected()) out.push_back(g);
        return out;
    }
    return level;
}

struct SurveyRow {
    std::int64_t q = 0;
    double best_density = 0.0;  // sigma (additive) or pi (multiplicative)
    std::string witness;        // canonical string of the winning graph
    int tie_count = 0;          // graphs within tolerance of the best
};

struct SurveyOptions {
    int s = 20;
    long a = 2;
    Objective objective = Objective::product;
    int max_vertices = 10;
    int max_degree = 3;
    int min_girth = 5;
    bool connected_only = true;
    double tie_tol = 1e-9;
    std::uint64_t budget = 1'000'000'000ULL;
};

// For each budget q, the densest lifted candidate among the enumerated
// graphs whose maximal s-clone blow-up stays within q.  The reported
// densities are lower bounds for the extremal density; they are exact
// values wherever a matching upper-bound argument pins the candidate down.
inline std::vector<SurveyRow> survey(const SurveyOptions& opt, std::int64_t q_from,
                                     std::int64_t q_to) {
    if (q_from > q_to) throw input_error("survey: empty budget range");
    struct Candidate {
        SimpleGraph graph;
        std::string canon;
        std::int64_t blowup_at_s;  // additive
        double density;
    };
    std::vector<Candidate> cands;
    for (int n = 1; n <= opt.max_vertices; ++n)
        for (const SimpleGraph& g :
             enumerate_graphs(n, opt.max_degree, opt.min_girth, opt.connected_only)) {
            Candidate c{g, canonical_string(g), 0, 0.0};
            const Pattern p = lift_graph_pattern(g, opt.a);
            c.blowup_at_s =
                optimize_blowup(p, opt.s, Objective::sum, OptMode::exact, opt.budget).sum_value;
            c.density = opt.objective == Objective::sum
                            ? rational_to_double(sigma_density(p).sigma)
                            : pi_density(p).pi;
            cands.push_back(std::move(c));
        }
    std::vector<SurveyRow> rows;
    for (std::int64_t q = q_from; q <= q_to; ++q) {
        SurveyRow row;
        row.q = q;
        double best = -std::numeric_limits<double>::infinity();
        for (const Candidate& c : cands)
            if (c.blowup_at_s <= q) best = std::max(best, c.density);
        for (const Candidate& c : cands) {
            if (c.blowup_at_s > q || c.density <= best - opt.tie_tol) continue;
            ++row.tie_count;
            if (c.density == best && row.witness.empty()) row.witness = c.canon;
        }
        row.best_density = best;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mgx
