#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mgx/common.hpp"

namespace mgx {

// An edge-weighted multigraph on n labelled vertices: every unordered pair
// carries a non-negative integer multiplicity.  Instances are immutable after
// construction; all operations on them are free functions.
class Multigraph {
public:
    Multigraph(int n, std::vector<std::uint32_t> mult) : n_(n), w_(std::move(mult)) {
        if (n < 0) throw input_error("Multigraph: negative vertex count");
        if (w_.size() != static_cast<std::size_t>(choose2(n)))
            throw input_error("Multigraph: multiplicity vector has wrong length");
    }

    explicit Multigraph(int n) : Multigraph(n, std::vector<std::uint32_t>(choose2(std::max(n, 0)), 0)) {}

    int n() const { return n_; }

    std::uint32_t mult(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw input_error("Multigraph::mult: invalid vertex pair");
        return w_[pair_index(u, v, n_)];
    }

    const std::vector<std::uint32_t>& weights() const { return w_; }

    Multigraph with_edge(int u, int v, std::uint32_t m) const {
        std::vector<std::uint32_t> w = w_;
        w[pair_index(u, v, n_)] = m;
        return Multigraph(n_, std::move(w));
    }

private:
    int n_;
    std::vector<std::uint32_t> w_;
};

// Multiset of edge multiplicities, kept as multiplicity -> number of pairs.
// The product of all multiplicities is the quantity of interest for the
// multiplicative problems; it is tracked exactly (big integer) and in log
// form for cheap comparisons.
class MultiplicityProfile {
public:
    MultiplicityProfile() = default;

    void add(std::uint32_t value, std::int64_t count = 1) {
        if (count == 0) return;
        counts_[value] += count;
        if (counts_[value] == 0) counts_.erase(value);
    }

    const std::map<std::uint32_t, std::int64_t>& counts() const { return counts_; }

    std::int64_t total_pairs() const {
        std::int64_t t = 0;
        for (const auto& [v, c] : counts_) t += c;
        return t;
    }

    bool is_zero() const {
        auto it = counts_.find(0);
        return it != counts_.end() && it->second > 0;
    }

    // Natural log of the product; -inf when some multiplicity is zero.
    double log_value() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        double s = 0.0;
        for (const auto& [v, c] : counts_)
            s += static_cast<double>(c) * std::log(static_cast<double>(v));
        return s;
    }

    BigInt product() const {
        if (is_zero()) return 0;
        BigInt p = 1;
        for (const auto& [v, c] : counts_)
            for (std::int64_t i = 0; i < c; ++i) p *= v;
        return p;
    }

    // Exact three-way comparison of the products (avoids float ties).
    int compare(const MultiplicityProfile& other) const {
        const bool za = is_zero(), zb = other.is_zero();
        if (za || zb) {
            if (za && zb) return 0;
            return za ? -1 : 1;
        }
        // Compare sum of c*log(v) with a wide margin first, fall back to exact.
        const double la = log_value(), lb = other.log_value();
        if (la < lb - 1e-6) return -1;
        if (la > lb + 1e-6) return 1;
        const BigInt pa = product(), pb = other.product();
        if (pa < pb) return -1;
        if (pa > pb) return 1;
        return 0;
    }

private:
    std::map<std::uint32_t, std::int64_t> counts_;
};

inline std::int64_t edge_sum(const Multigraph& g) {
    std::int64_t s = 0;
    for (std::uint32_t m : g.weights()) s += m;
    return s;
}

inline MultiplicityProfile edge_profile(const Multigraph& g) {
    MultiplicityProfile p;
    for (std::uint32_t m : g.weights()) p.add(m);
    return p;
}

inline BigInt edge_product(const Multigraph& g) { return edge_profile(g).product(); }

// Sum of multiplicities inside the vertex subset X.
inline std::int64_t subset_sum(const Multigraph& g, const std::vector<int>& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += g.mult(x[i], x[j]);
    return s;
}

struct SqCheckResult {
    bool ok = true;
    // Lexicographically smallest s-subset whose internal sum exceeds q.
    std::optional<std::vector<int>> witness;
    std::int64_t witness_sum = 0;
};

// Checks that every s-subset of vertices spans at most q edges counted with
// multiplicity.  s > n is rejected as an input error unless the caller
// explicitly opts into treating the condition as vacuous.
inline SqCheckResult is_sq_graph(const Multigraph& g, int s, std::int64_t q,
                                 bool allow_vacuous = false) {
    if (s < 2) throw input_error("is_sq_graph: s must be at least 2");
    if (s > g.n()) {
        if (!allow_vacuous) throw input_error("is_sq_graph: s exceeds vertex count");
        return {};
    }
    const int n = g.n();
    std::vector<int> x(s);
    for (int i = 0; i < s; ++i) x[i] = i;
    while (true) {
        // Running sum with early exit as soon as q is exceeded.
        std::int64_t sum = 0;
        bool bad = false;
        for (int i = 0; i < s && !bad; ++i)
            for (int j = i + 1; j < s; ++j) {
                sum += g.mult(x[i], x[j]);
                if (sum > q) { bad = true; break; }
            }
        if (bad) return {false, x, subset_sum(g, x)};
        // Advance to the next s-subset in lexicographic order.
        int i = s - 1;
        while (i >= 0 && x[i] == n - s + i) --i;
        if (i < 0) break;
        ++x[i];
        for (int j = i + 1; j < s; ++j) x[j] = x[j - 1] + 1;
    }
    return {};
}

// Text format: first line is the vertex count, then one "u v m" triple per
// line with 0-based endpoints u < v; omitted pairs have multiplicity 0.
inline Multigraph parse_multigraph(std::istream& in) {
    int n;
    if (!(in >> n) || n < 0) throw input_error("multigraph text: bad vertex count");
    std::vector<std::uint32_t> w(choose2(n), 0);
    int u, v;
    long long m;
    while (in >> u >> v >> m) {
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw input_error("multigraph text: endpoints must satisfy 0 <= u < v < n");
        if (m < 0 || m > std::numeric_limits<std::uint32_t>::max())
            throw input_error("multigraph text: multiplicity out of range");
        w[pair_index(u, v, n)] = static_cast<std::uint32_t>(m);
    }
    return Multigraph(n, std::move(w));
}

inline Multigraph parse_multigraph(const std::string& text) {
    std::istringstream in(text);
    return parse_multigraph(in);
}

inline std::string format_multigraph(const Multigraph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.mult(u, v) != 0) out << u << ' ' << v << ' ' << g.mult(u, v) << '\n';
    return out.str();
}

}  // namespace mgx
