#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mgx/common.hpp"
#include "mgx/graph.hpp"
#include "mgx/pattern.hpp"

namespace mgx {

// Layered clique pattern: blocks j = 0..d of sizes r_j; a vertex in block j
// carries loop a-j, and a pair {u,v} with u in the earlier block carries
// multiplicity a - block(u) + 1 (pairs inside block j carry a-j+1).
struct TuranSpec {
    std::vector<int> r;  // block sizes r_0,...,r_d
    long a = 0;

    int d() const { return static_cast<int>(r.size()) - 1; }

    bool valid() const {
        if (r.empty() || r.front() <= 0 || r.back() <= 0) return false;
        for (int x : r)
            if (x < 0) return false;
        return a >= d();
    }

    int vertex_count() const { return std::accumulate(r.begin(), r.end(), 0); }
};

inline Pattern make_turan_pattern(const TuranSpec& spec) {
    if (!spec.valid())
        throw input_error("make_turan_pattern: need non-empty blocks at the ends, "
                          "non-negative sizes, and a >= d");
    std::vector<int> block;  // block index of each vertex, in block order
    for (int j = 0; j < static_cast<int>(spec.r.size()); ++j)
        for (int i = 0; i < spec.r[j]; ++i) block.push_back(j);
    const int k = static_cast<int>(block.size());
    std::vector<std::uint32_t> loops(k), pairs;
    for (int u = 0; u < k; ++u) loops[u] = static_cast<std::uint32_t>(spec.a - block[u]);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            pairs.push_back(static_cast<std::uint32_t>(spec.a - block[u] + 1));
    return Pattern(std::move(loops), std::move(pairs));
}

// Pattern of a simple graph at level a: loops a-1 everywhere, pairs a+1 on
// edges and a on non-edges.  Requires a >= 1.
inline Pattern lift_graph_pattern(const SimpleGraph& g, long a) {
    if (a < 1) throw input_error("lift_graph_pattern: a must be at least 1");
    if (g.n() == 0) throw input_error("lift_graph_pattern: empty graph");
    std::vector<std::uint32_t> loops(g.n(), static_cast<std::uint32_t>(a - 1)), pairs;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            pairs.push_back(static_cast<std::uint32_t>(g.has_edge(u, v) ? a + 1 : a));
    return Pattern(std::move(loops), std::move(pairs));
}

// ---- named simple graphs -------------------------------------------------

inline SimpleGraph star_graph(int leaves) {
    SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle_graph: need at least 3 vertices");
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, ((i + 2) % 5) + 5);  // inner pentagram
    }
    return g;
}

// Triangle-free 5-regular graph on 16 vertices (folded 5-cube): vertices are
// 4-bit strings, adjacent when they differ in one bit or in all four.
inline SimpleGraph clebsch_graph() {
    SimpleGraph g(16);
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            const int x = u ^ v;
            if (__builtin_popcount(x) == 1 || x == 15) g.add_edge(u, v);
        }
    return g;
}

// Point-line incidence graph of the projective plane of order 3: 13 points,
// 13 lines, 4-regular, girth 6.
inline SimpleGraph h26_graph() {
    // Points and lines are both the 13 projective classes of nonzero vectors
    // over GF(3); point p lies on line l when <p,l> = 0.
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < 3 && reps.size() < 13; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                std::array<int, 3> v{x, y, z};
                // normalized representative: first nonzero coordinate is 1
                int first = (v[0] != 0) ? v[0] : (v[1] != 0 ? v[1] : v[2]);
                if (first != 1) continue;
                reps.push_back(v);
            }
    if (reps.size() != 13) throw std::logic_error("h26_graph: projective plane size");
    SimpleGraph g(26);
    for (int p = 0; p < 13; ++p)
        for (int l = 0; l < 13; ++l) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot += reps[p][i] * reps[l][i];
            if (dot % 3 == 0) g.add_edge(p, 13 + l);
        }
    return g;
}

inline SimpleGraph h6_graph() {
    return SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

inline SimpleGraph h7_graph() {
    return SimpleGraph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}, {6, 3}});
}

inline SimpleGraph h9_graph() {
    return SimpleGraph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                                       {0, 6}, {6, 3}, {1, 7}, {7, 4}, {2, 8}, {8, 5}});
}

// The five-member family of subcubic girth-5 witnesses plus the claw.
inline std::vector<std::pair<std::string, SimpleGraph>> c5_family() {
    return {{"K1_3", star_graph(3)}, {"C5", cycle_graph(5)},   {"H6", h6_graph()},
            {"H7", h7_graph()},      {"H9", h9_graph()},       {"Petersen", petersen_graph()}};
}

// ---- named patterns --------------------------------------------------------

// Accepted names: K1_<l>, P<l>, C<l>, H6, H7, H9, Petersen, Clebsch, H26
// (all lifted at level a), plus the two-vertex patterns Pplus2 (pair a+2,
// loops a-1) and K1_inf (pair a+1, loops a and a-1).
inline Pattern named_pattern(const std::string& name, long a) {
    auto parse_suffix = [&](std::size_t at) {
        const std::string digits = name.substr(at);
        if (digits.empty()) throw input_error("named_pattern: missing size in '" + name + "'");
        return std::stoi(digits);
    };
    if (name == "Pplus2") {
        if (a < 1) throw input_error("named_pattern: Pplus2 requires a >= 1");
        return Pattern({static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(a - 1)},
                       {static_cast<std::uint32_t>(a + 2)});
    }
    if (name == "K1_inf") {
        if (a < 1) throw input_error("named_pattern: K1_inf requires a >= 1");
        return Pattern({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a - 1)},
                       {static_cast<std::uint32_t>(a + 1)});
    }
    if (name.rfind("K1_", 0) == 0) return lift_graph_pattern(star_graph(parse_suffix(3)), a);
    if (name == "Petersen") return lift_graph_pattern(petersen_graph(), a);
    if (name == "Clebsch") return lift_graph_pattern(clebsch_graph(), a);
    if (name == "H26") return lift_graph_pattern(h26_graph(), a);
    if (name == "H6") return lift_graph_pattern(h6_graph(), a);
    if (name == "H7") return lift_graph_pattern(h7_graph(), a);
    if (name == "H9") return lift_graph_pattern(h9_graph(), a);
    if (name[0] == 'P') return lift_graph_pattern(path_graph(parse_suffix(1)), a);
    if (name[0] == 'C') return lift_graph_pattern(cycle_graph(parse_suffix(1)), a);
    throw input_error("named_pattern: unknown name '" + name + "'");
}

// Strict total order on layered clique specs: first by a, then by block
// sizes lexicographically with a proper prefix ordered before its extension.
// Along this order the optimal densities are monotone non-decreasing.
inline std::strong_ordering turan_order_compare(const TuranSpec& lhs, const TuranSpec& rhs) {
    if (!lhs.valid() || !rhs.valid())
        throw input_error("turan_order_compare: invalid spec");
    if (lhs.a != rhs.a) return lhs.a <=> rhs.a;
    const std::size_t common = std::min(lhs.r.size(), rhs.r.size());
    for (std::size_t i = 0; i < common; ++i)
        if (lhs.r[i] != rhs.r[i]) return lhs.r[i] <=> rhs.r[i];
    return lhs.r.size() <=> rhs.r.size();
}

}  // namespace mgx
