#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mgx/blowup.hpp"
#include "mgx/catalog.hpp"
#include "mgx/common.hpp"

namespace mgx {

// Number of edges of the balanced complete r-partite graph on n vertices
// (the largest K_{r+1}-free edge count).
inline std::int64_t turan_graph_edges(int n, int r) {
    if (r < 1 || n < 0) throw input_error("turan_graph_edges: bad arguments");
    std::int64_t internal = 0;
    for (int i = 0; i < r; ++i) {
        const int part = n / r + (i < n % r ? 1 : 0);
        internal += choose2(part);
    }
    return choose2(n) - internal;
}

namespace detail {

// The closed forms below cover single-block specs (d = 0) and two-block
// specs (r_0, 0, ..., 0, r_d); other shapes are rejected.
inline void require_supported_shape(const TuranSpec& spec) {
    if (!spec.valid()) throw input_error("layered clique spec is invalid");
    for (std::size_t j = 1; j + 1 < spec.r.size(); ++j)
        if (spec.r[j] != 0)
            throw input_error("closed forms support only empty interior blocks");
}

}  // namespace detail

// Smallest subset size at which the blow-up structure stabilizes.
inline int turan_s0(const TuranSpec& spec) {
    detail::require_supported_shape(spec);
    const int r0 = spec.r.front(), rd = spec.r.back(), d = spec.d();
    return r0 * (d * rd + 1) + rd + 1;
}

// Upper end of the range on which the growth of the extremal function is
// pinned by blow-ups.
inline int turan_s1(const TuranSpec& spec) {
    return 2 * turan_s0(spec) - spec.d() * spec.r.front() - 2;
}

// Increment of the maximal blow-up weight when going from n to n+1 vertices.
inline std::int64_t turan_delta(const TuranSpec& spec, int n) {
    detail::require_supported_shape(spec);
    if (n < 1) throw input_error("turan_delta: n must be positive");
    const long a = spec.a;
    const int d = spec.d();
    if (d == 0) {
        const int r = spec.r.front();
        return a * static_cast<std::int64_t>(n) + turan_graph_edges(n + 1, r) -
               turan_graph_edges(n, r);
    }
    const int r0 = spec.r.front(), rd = spec.r.back();
    const int s0 = turan_s0(spec);
    const std::int64_t q = n / (s0 - 1);
    const int t = n % (s0 - 1);
    const std::int64_t head = static_cast<std::int64_t>(a + 1) * n;
    const int block = r0 * d + 1;  // one light vertex plus its private heavy growth
    // exact multiples of the block: a light clone is added
    if (t % block == 0 && t / block <= rd - 1)
        return head - q * (static_cast<std::int64_t>(d) * rd + 1) - static_cast<std::int64_t>(d) * (t / block);
    // inside a block: heavy clones are added one by one in d waves
    if (t < rd * block) {
        const int k = t / block;
        const int off = t - k * block;  // 1..block-1
        const int l = (off - 1) / r0;
        return head - q * (static_cast<std::int64_t>(d) * rd + 1) -
               static_cast<std::int64_t>(d) * k - l;
    }
    // tail of the period: the next period's structure is already forming
    return head - (q + 1) * (static_cast<std::int64_t>(d) * rd + 1) + 1;
}

// Largest additive weight of an n-clone blow-up of the layered pattern,
// accumulated from the increments (single-block specs use the r-partite
// closed form directly).
inline std::int64_t turan_sigma_value(const TuranSpec& spec, int n) {
    detail::require_supported_shape(spec);
    if (n < 0) throw input_error("turan_sigma_value: negative n");
    if (spec.d() == 0)
        return spec.a * choose2(n) + turan_graph_edges(n, spec.r.front());
    std::int64_t total = 0;
    for (int m = 1; m < n; ++m) total += turan_delta(spec, m);
    return total;
}

// Possible numbers of light clones in a sum-optimal blow-up on n vertices,
// returned as an inclusive range (the range has one or two values).
inline std::pair<std::int64_t, std::int64_t> turan_light_count_range(const TuranSpec& spec, int n) {
    detail::require_supported_shape(spec);
    if (spec.d() == 0) throw input_error("turan_light_count_range: needs d >= 1");
    if (n < 0) throw input_error("turan_light_count_range: negative n");
    const int r0 = spec.r.front(), rd = spec.r.back(), d = spec.d();
    const int s0 = turan_s0(spec);
    const std::int64_t q = n / (s0 - 1);
    const int t = n % (s0 - 1);
    const std::int64_t base = q * rd;
    const int block = r0 * d + 1;
    if (t == 0) return {base, base};
    for (int k = 1; k <= rd; ++k)
        if ((k - 1) * block + 1 <= t && t <= (k - 1) * block + r0)
            return {base + k - 1, base + k};
    for (int k = 1; k <= rd - 1; ++k)
        if ((k - 1) * block + r0 + 1 <= t && t <= k * block)
            return {base + k, base + k};
    if ((rd - 1) * block + r0 + 1 <= t && t < s0 - 1) return {base + rd, base + rd};
    throw std::logic_error("turan_light_count_range: uncovered residue");
}

// In the sum-optimal blow-up on s1 vertices every vertex has the same degree
// (a+1)(s1-1) - d(2 r_d - 1) - 1; verifies this on the computed optimum.
inline bool heavy_degree_check(const TuranSpec& spec,
                               std::uint64_t budget = 1'000'000'000ULL) {
    detail::require_supported_shape(spec);
    if (spec.d() == 0) throw input_error("heavy_degree_check: needs d >= 1");
    const int s1 = turan_s1(spec);
    const Pattern p = make_turan_pattern(spec);
    const BlowupOptimum opt = optimize_blowup(p, s1, Objective::sum, OptMode::exact, budget);
    const Multigraph g = build_blowup(p, opt.witness);
    const std::int64_t want = (spec.a + 1) * static_cast<std::int64_t>(s1 - 1) -
                              spec.d() * (2 * spec.r.back() - 1) - 1;
    for (int v = 0; v < g.n(); ++v) {
        std::int64_t deg = 0;
        for (int u = 0; u < g.n(); ++u)
            if (u != v) deg += g.mult(std::min(u, v), std::max(u, v));
        if (deg != want) return false;
    }
    return true;
}

}  // namespace mgx
