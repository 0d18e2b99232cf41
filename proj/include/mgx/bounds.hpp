#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mgx/common.hpp"
#include "mgx/density.hpp"
#include "mgx/turan.hpp"

namespace mgx {

// ---- integer AM-GM ----------------------------------------------------------

struct AmGmSplit {
    std::int64_t base = 0;   // n - t parts equal to base
    std::int64_t count_base = 0;
    std::int64_t count_base_plus_1 = 0;  // t parts equal to base+1
};

// The largest product of n non-negative integers with the given total: the
// parts are as equal as possible.
inline AmGmSplit integer_am_gm_max(std::int64_t n, std::int64_t total) {
    if (n <= 0 || total < 0) throw input_error("integer_am_gm_max: bad arguments");
    AmGmSplit s;
    s.base = total / n;
    s.count_base_plus_1 = total % n;
    s.count_base = n - s.count_base_plus_1;
    return s;
}

inline BigInt integer_am_gm_product(std::int64_t n, std::int64_t total) {
    const AmGmSplit s = integer_am_gm_max(n, total);
    BigInt p = 1;
    for (std::int64_t i = 0; i < s.count_base; ++i) p *= s.base;
    for (std::int64_t i = 0; i < s.count_base_plus_1; ++i) p *= s.base + 1;
    return p;
}

// ---- vertex-averaging bounds -------------------------------------------------

struct BoundTable {
    int start_n = 0;
    std::vector<std::int64_t> values;  // values[i] bounds n = start_n + i

    std::int64_t at(int n) const {
        if (n < start_n || n >= start_n + static_cast<int>(values.size()))
            throw input_error("BoundTable::at: n out of range");
        return values[n - start_n];
    }
};

// Propagates an upper bound from n = s upward through the averaging
// inequality  f(n+1) <= floor( (n+1)/(n-1) * f(n) ).
inline BoundTable averaging_propagate(int s, std::int64_t f_s, int n_max) {
    if (s < 2 || n_max < s) throw input_error("averaging_propagate: bad range");
    BoundTable t;
    t.start_n = s;
    t.values.push_back(f_s);
    for (int n = s; n < n_max; ++n) {
        const std::int64_t f = t.values.back();
        t.values.push_back((static_cast<std::int64_t>(n) + 1) * f / (n - 1));
    }
    return t;
}

// Checks the self-improving condition  (n+1) f(n) < (n-1) (f(n+1) + 1)  for
// all consecutive entries; when it holds, f dominates the extremal function
// for every n >= start once it does at the start.
inline bool averaging_self_check(const BoundTable& t) {
    for (std::size_t i = 0; i + 1 < t.values.size(); ++i) {
        const std::int64_t n = t.start_n + static_cast<std::int64_t>(i);
        if ((n + 1) * t.values[i] >= (n - 1) * (t.values[i + 1] + 1)) return false;
    }
    return true;
}

// ---- linear-threshold function ------------------------------------------------

// The least slope m such that sum_{i=1}^{s-1} floor(1 + m i) exceeds q.  The
// sum is a right-continuous step function of m whose jumps are at rationals
// with denominator < s, so the minimum is attained at such a breakpoint.
inline Rational fk_m(int s, std::int64_t q) {
    if (s < 2 || q < 0) throw input_error("fk_m: need s >= 2, q >= 0");
    auto value = [&](const Rational& m) {
        const BigInt num = boost::multiprecision::numerator(m);
        const BigInt den = boost::multiprecision::denominator(m);
        BigInt total = 0;
        for (int i = 1; i < s; ++i) total += 1 + (num * i) / den;
        return total;
    };
    Rational best(q);  // m = q always works (the i = 1 term is already q+1)
    for (int i = 1; i < s; ++i)
        for (std::int64_t j = 0; j <= q * i; ++j) {
            const Rational cand(j, i);
            if (cand < best && value(cand) > q) best = cand;
        }
    return best;
}

// ---- flat intervals of the multiplicative extremal function --------------------

struct FlatInterval {
    std::int64_t q_low = 0;
    std::int64_t q_high = 0;
    double value = 0.0;  // the constant density a ((a+1)/a)^((r-1)/r)
};

// On s-set budgets q_low..q_high the limiting multiplicative density is the
// same constant; q_low is the maximal blow-up weight of the single-block
// pattern on s vertices.
inline FlatInterval flat_interval(int r, long a, int s) {
    if (r < 1 || a < 1 || s < 2 * r + 1)
        throw input_error("flat_interval: need r >= 1, a >= 1, s >= 2r+1");
    FlatInterval f;
    f.q_low = a * choose2(s) + turan_graph_edges(s, r);
    f.q_high = f.q_low + (s - 1) / r - 1;
    const double da = static_cast<double>(a);
    f.value = da * std::pow((da + 1) / da, (r - 1.0) / r);
    return f;
}

// ---- large-a polynomial gate ----------------------------------------------------

struct GateResult {
    int exact_cmp = 0;      // sign of LHS - RHS of the polynomial inequality
    bool gate = false;      // polynomial inequality (>=) holds
    bool equiv_b = false;   // block-count form of the inequality
    bool equiv_c = false;   // weight form of the inequality
    double margin_b = 0.0;
    double margin_c = 0.0;
    bool boundary_b = false;  // margin too small to call the float forms
    bool boundary_c = false;
    std::int64_t threshold = 0;  // every a above this satisfies the gate
};

inline std::int64_t gate_threshold(int rd, int d) {
    const std::int64_t m = 2LL * rd - 1;
    return d * m * (d * m + 1) +
           static_cast<std::int64_t>(d - 1) * m * (rd - 1) *
               (static_cast<std::int64_t>(rd) * (d - 1) * m + 2 * rd);
}

// Decides the polynomial inequality
//   (a+1)^{rd(d-1)(2rd-1)+2rd} (a-d)^{2rd-1} (a-d+1)^{(2rd-1)(rd-1)}
//     >= a^{d rd (2rd-1) + 2rd}
// exactly, and evaluates the two equivalent analytic forms numerically.
inline GateResult large_a_gate(int r0, int rd, int d, long a) {
    if (r0 < 1 || rd < 1 || d < 1 || a < d + 1)
        throw input_error("large_a_gate: need r0,rd,d >= 1 and a >= d+1");
    const std::int64_t m = 2LL * rd - 1;
    GateResult g;
    auto bigpow = [](BigInt base, std::int64_t e) {
        BigInt r = 1;
        while (e-- > 0) r *= base;
        return r;
    };
    const BigInt lhs = bigpow(a + 1, static_cast<std::int64_t>(rd) * (d - 1) * m + 2 * rd) *
                       bigpow(a - d, m) * bigpow(a - d + 1, m * (rd - 1));
    const BigInt rhs = bigpow(a, static_cast<std::int64_t>(d) * rd * m + 2 * rd);
    g.exact_cmp = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    g.gate = g.exact_cmp >= 0;

    TuranSpec spec;
    spec.r.assign(d + 1, 0);
    spec.r.front() = r0;
    spec.r.back() = rd;
    spec.a = a;
    const double xs = turan_asymptotics(spec).x_star;
    const double big_d = static_cast<double>(d) * m + 2;
    const double ratio = (1.0 - rd * xs) / (r0 * rd * xs);
    g.margin_b = big_d - m * ratio;
    g.margin_c = big_d / (r0 * big_d + m) - (1.0 - rd * xs) / r0;
    g.equiv_b = g.margin_b >= 0;
    g.equiv_c = g.margin_c >= 0;
    g.boundary_b = std::fabs(g.margin_b) < 1e-12;
    g.boundary_c = std::fabs(g.margin_c) < 1e-12;
    g.threshold = gate_threshold(rd, d);
    return g;
}

}  // namespace mgx
