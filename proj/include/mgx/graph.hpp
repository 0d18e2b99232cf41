#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mgx/common.hpp"

namespace mgx {

// A simple graph on at most 64 vertices, stored as adjacency bitmasks.
class SimpleGraph {
public:
    explicit SimpleGraph(int n = 0) : n_(n), adj_(n, 0) {
        if (n < 0 || n > 64) throw input_error("SimpleGraph: vertex count out of range");
    }

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        SimpleGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw input_error("SimpleGraph::add_edge: invalid edge");
        adj_[u] |= (1ULL << v);
        adj_[v] |= (1ULL << u);
    }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ULL; }

    std::uint64_t neighbours(int v) const { return adj_[v]; }

    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int e = 0;
        for (int v = 0; v < n_; ++v) e += degree(v);
        return e / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) es.emplace_back(u, v);
        return es;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (int v = 0; v < n_; ++v)
                if ((frontier >> v) & 1ULL) next |= adj_[v];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == ((n_ == 64) ? ~0ULL : ((1ULL << n_) - 1));
    }

    // Length of a shortest cycle; INT_MAX for forests.
    int girth() const {
        int best = std::numeric_limits<int>::max();
        for (int src = 0; src < n_; ++src) {
            // BFS from src; a non-tree edge closing at depths d1,d2 gives a
            // cycle through src of length d1+d2+1.
            std::vector<int> dist(n_, -1), parent(n_, -1);
            std::vector<int> queue{src};
            dist[src] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int v = 0; v < n_; ++v) {
                    if (!has_edge(u, v)) continue;
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if (v != parent[u]) {
                        best = std::min(best, dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        return best;
    }

    std::vector<SimpleGraph> components() const {
        std::vector<SimpleGraph> comps;
        std::uint64_t done = 0;
        for (int s = 0; s < n_; ++s) {
            if ((done >> s) & 1ULL) continue;
            std::uint64_t seen = 1ULL << s, frontier = seen;
            while (frontier) {
                std::uint64_t next = 0;
                for (int v = 0; v < n_; ++v)
                    if ((frontier >> v) & 1ULL) next |= adj_[v];
                frontier = next & ~seen;
                seen |= next;
            }
            done |= seen;
            std::vector<int> vs;
            for (int v = 0; v < n_; ++v)
                if ((seen >> v) & 1ULL) vs.push_back(v);
            SimpleGraph c(static_cast<int>(vs.size()));
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (has_edge(vs[i], vs[j])) c.add_edge(static_cast<int>(i), static_cast<int>(j));
            comps.push_back(c);
        }
        return comps;
    }

    // Upper-triangle adjacency bits under the identity labelling, packed
    // row by row; the canonical form is the minimum over all relabellings.
    std::vector<std::uint8_t> adjacency_bits() const {
        std::vector<std::uint8_t> bits;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) bits.push_back(has_edge(u, v) ? 1 : 0);
        return bits;
    }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

// Canonical labelling: the lexicographically smallest upper-triangle
// adjacency bitstring over all vertex permutations, found by extending
// partial permutations and pruning branches whose emitted prefix already
// exceeds the best complete string.
inline std::vector<std::uint8_t> canonical_form(const SimpleGraph& g) {
    const int n = g.n();
    const std::size_t len = static_cast<std::size_t>(choose2(n));
    std::vector<std::uint8_t> best(len, 2);  // 2 = "unset", larger than any bit
    std::vector<int> perm;                   // perm[i] = original vertex placed at slot i
    std::vector<std::uint8_t> prefix;

    auto rec = [&](auto&& self) -> void {
        const int placed = static_cast<int>(perm.size());
        if (placed == n) {
            if (prefix < best) best = prefix;
            return;
        }
        std::uint64_t used = 0;
        for (int v : perm) used |= 1ULL << v;
        for (int cand = 0; cand < n; ++cand) {
            if ((used >> cand) & 1ULL) continue;
            // Emit the column of adjacency bits between cand and the
            // already-placed vertices.
            const std::size_t old_len = prefix.size();
            bool worse = false;
            for (int i = 0; i < placed; ++i) {
                const std::uint8_t bit = g.has_edge(perm[i], cand) ? 1 : 0;
                prefix.push_back(bit);
                const std::uint8_t ref = best[prefix.size() - 1];
                if (bit > ref) { worse = true; break; }
                if (bit < ref) {
                    // Every completion of this strictly smaller prefix beats
                    // the incumbent, so lower the incumbent to the prefix
                    // padded with ones; deeper comparisons stay sound and a
                    // real completion (<= the padding) is recorded at the leaf.
                    std::copy(prefix.begin(), prefix.end(), best.begin());
                    std::fill(best.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                              best.end(), 1);
                }
            }
            if (!worse) {
                perm.push_back(cand);
                self(self);
                perm.pop_back();
            }
            prefix.resize(old_len);
        }
    };
    rec(rec);
    return best;
}

inline SimpleGraph graph_from_canonical(int n, const std::vector<std::uint8_t>& bits) {
    SimpleGraph g(n);
    std::size_t idx = 0;
    // canonical_form emits column-by-column: bits between slot j and slots <j.
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (bits[idx]) g.add_edge(i, j);
    return g;
}

// Complete isomorphism invariant.  The permutation search runs per connected
// component (isolated vertices and small components would otherwise defeat
// the prefix pruning entirely), and the component keys are sorted.
inline std::string canonical_string(const SimpleGraph& g) {
    std::vector<std::string> keys;
    for (const SimpleGraph& c : g.components()) {
        std::string s = std::to_string(c.n()) + ":";
        for (std::uint8_t b : canonical_form(c)) s += static_cast<char>('0' + b);
        keys.push_back(std::move(s));
    }
    std::sort(keys.begin(), keys.end());
    std::string out = std::to_string(g.n());
    for (const std::string& k : keys) {
        out += '|';
        out += k;
    }
    return out;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n() == b.n() && canonical_string(a) == canonical_string(b);
}

}  // namespace mgx
