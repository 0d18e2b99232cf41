#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mgx/catalog.hpp"
#include "mgx/common.hpp"
#include "mgx/graph.hpp"
#include "mgx/linalg.hpp"
#include "mgx/pattern.hpp"

namespace mgx {

enum class Objective { sum, product };

// ---- additive density ------------------------------------------------------

struct SigmaResult {
    Rational sigma;
    std::vector<Rational> weighting;  // full k-vector, zeros off the support
    std::vector<int> support;
};

// Exact maximum of x^T A_P x over the probability simplex, where A_P has the
// loops on the diagonal.  Every support is tried; on each support the
// stationary point is the solution of the balance system
//   sum_{u in S} A[v][u] x_u = sigma  (v in S),   sum x = 1.
// The global maximum is attained at such a point with non-negative weights
// (points on singular supports reappear on smaller supports), so the maximum
// of the solved values is exact.
inline SigmaResult sigma_density(const Pattern& p) {
    const int k = p.k();
    if (k > 24) throw input_error("sigma_density: pattern has more than 24 vertices");
    SigmaResult best;
    best.sigma = Rational(-1);
    bool have = false;
    std::vector<int> sup;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        sup.clear();
        for (int v = 0; v < k; ++v)
            if ((mask >> v) & 1u) sup.push_back(v);
        const int m = static_cast<int>(sup.size());
        std::vector<std::vector<Rational>> mat(m + 1, std::vector<Rational>(m + 1, 0));
        std::vector<Rational> rhs(m + 1, 0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) mat[i][j] = static_cast<long>(p.entry(sup[i], sup[j]));
            mat[i][m] = -1;  // -sigma
        }
        for (int j = 0; j < m; ++j) mat[m][j] = 1;
        rhs[m] = 1;
        auto sol = solve_linear_rational(mat, rhs);
        if (!sol) continue;
        bool feasible = true;
        for (int i = 0; i < m && feasible; ++i) feasible = (*sol)[i] > 0;
        if (!feasible) continue;
        const Rational sigma = (*sol)[m];
        if (!have || sigma > best.sigma) {
            have = true;
            best.sigma = sigma;
            best.weighting.assign(k, Rational(0));
            for (int i = 0; i < m; ++i) best.weighting[sup[i]] = (*sol)[i];
            best.support = sup;
        }
    }
    if (!have) throw std::logic_error("sigma_density: no stationary support found");
    return best;
}

// ---- multiplicative density ------------------------------------------------

struct PiResult {
    double pi = -std::numeric_limits<double>::infinity();
    std::vector<double> weighting;
    std::vector<int> support;
    double kkt_residual = 0.0;  // balance/exclusion violation at the optimum
    bool minus_infinity = false;
};

namespace detail {

// Projected-ascent pass for f(x) = x^T L x over the simplex restricted to a
// fixed admissible support; used only to cross-check the enumeration result.
inline double pi_ascent(const std::vector<std::vector<double>>& l, std::vector<double> x,
                        int iters = 4000) {
    const int m = static_cast<int>(x.size());
    double eta = 0.5;
    auto value = [&](const std::vector<double>& y) {
        double s = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s += l[i][j] * y[i] * y[j];
        return s;
    };
    double cur = value(x);
    for (int it = 0; it < iters; ++it) {
        std::vector<double> grad(m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) grad[i] += 2 * l[i][j] * x[j];
        std::vector<double> y(m);
        double norm = 0;
        for (int i = 0; i < m; ++i) {
            y[i] = x[i] * std::exp(eta * grad[i]);
            norm += y[i];
        }
        for (int i = 0; i < m; ++i) y[i] /= norm;
        const double nv = value(y);
        if (nv >= cur) {
            x = y;
            cur = nv;
        } else {
            eta *= 0.5;
            if (eta < 1e-12) break;
        }
    }
    return cur;
}

}  // namespace detail

// Maximum of sum_{u,v} ln(A_P[u][v]) x_u x_v over the simplex.  Supports with
// a zero multiplicity anywhere inside are worth -infinity and are skipped
// (a zero loop is allowed only on a singleton support, where the value is
// ln of the loop, i.e. -infinity for loop 0).  The stationary systems are the
// log-space analogue of the additive balance equations, solved in doubles;
// a multi-start projected ascent cross-checks the winner.
inline PiResult pi_density(const Pattern& p, double tol = 1e-10) {
    const int k = p.k();
    if (k > 24) throw input_error("pi_density: pattern has more than 24 vertices");
    PiResult best;
    best.minus_infinity = true;
    std::vector<int> sup;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        sup.clear();
        for (int v = 0; v < k; ++v)
            if ((mask >> v) & 1u) sup.push_back(v);
        const int m = static_cast<int>(sup.size());
        if (m == 1) {
            const std::uint32_t loop = p.loop(sup[0]);
            const double val = loop == 0 ? -std::numeric_limits<double>::infinity()
                                         : std::log(static_cast<double>(loop));
            if (best.minus_infinity || val > best.pi) {
                best.pi = val;
                best.minus_infinity = (loop == 0);
                best.weighting.assign(k, 0.0);
                best.weighting[sup[0]] = 1.0;
                best.support = sup;
                best.kkt_residual = 0.0;
            }
            continue;
        }
        bool admissible = true;
        for (int i = 0; i < m && admissible; ++i) {
            if (p.loop(sup[i]) == 0) admissible = false;
            for (int j = i + 1; j < m && admissible; ++j)
                if (p.pair(sup[i], sup[j]) == 0) admissible = false;
        }
        if (!admissible) continue;
        std::vector<std::vector<double>> mat(m + 1, std::vector<double>(m + 1, 0.0));
        std::vector<double> rhs(m + 1, 0.0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j)
                mat[i][j] = std::log(static_cast<double>(p.entry(sup[i], sup[j])));
            mat[i][m] = -1.0;
        }
        for (int j = 0; j < m; ++j) mat[m][j] = 1.0;
        rhs[m] = 1.0;
        auto sol = solve_linear_double(mat, rhs);
        if (!sol) continue;
        bool feasible = true;
        for (int i = 0; i < m && feasible; ++i) feasible = (*sol)[i] > 1e-12;
        if (!feasible) continue;
        const double pi = (*sol)[m];
        if (best.minus_infinity || pi > best.pi) {
            best.minus_infinity = false;
            best.pi = pi;
            best.weighting.assign(k, 0.0);
            for (int i = 0; i < m; ++i) best.weighting[sup[i]] = (*sol)[i];
            best.support = sup;
            // residuals: balance on the support, exclusion off it
            double res = 0.0;
            for (int v = 0; v < k; ++v) {
                double deg = 0.0;
                bool reachable = true;
                for (int i = 0; i < m; ++i) {
                    const std::uint32_t e = p.entry(v, sup[i]);
                    if (e == 0 && (*sol)[i] > 0) { reachable = false; break; }
                    if (e != 0) deg += std::log(static_cast<double>(e)) * (*sol)[i];
                }
                if (!reachable) continue;  // -inf degree never violates KKT
                if ((mask >> v) & 1u)
                    res = std::max(res, std::fabs(deg - pi));
                else
                    res = std::max(res, deg - pi);
            }
            best.kkt_residual = res;
        }
    }
    if (best.minus_infinity || best.support.size() < 2) return best;
    // Cross-check with multi-start ascent on the winning support.
    const int m = static_cast<int>(best.support.size());
    std::vector<std::vector<double>> l(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            l[i][j] = std::log(static_cast<double>(p.entry(best.support[i], best.support[j])));
    double ascent = -std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    for (int start = 0; start < 5; ++start) {
        std::vector<double> x(m);
        double norm = 0;
        for (int i = 0; i < m; ++i) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            x[i] = 0.25 + static_cast<double>((seed >> 33) & 0xffff) / 65536.0;
            norm += x[i];
        }
        for (int i = 0; i < m; ++i) x[i] /= norm;
        ascent = std::max(ascent, detail::pi_ascent(l, x));
    }
    if (ascent > best.pi + std::max(tol, 1e-8))
        throw std::logic_error("pi_density: ascent cross-check exceeded enumeration value");
    return best;
}

// ---- layered clique asymptotics ---------------------------------------------

struct TuranAsymptotics {
    double x_star = 0.0;          // weight of each light vertex
    double heavy_weight = 0.0;    // weight of each of the r_0 heavy vertices
    double pi = 0.0;
    std::vector<double> weighting;  // per pattern vertex, block order
};

// Limiting multiplicative density of the layered clique pattern with block
// sizes (r_0, 0, ..., 0, r_d); requires a >= d+1.  The optimum puts weight
// x* on each of the r_d light vertices and (1 - r_d x*)/r_0 on each heavy
// vertex, where x* solves the one-dimensional balance equation.
inline TuranAsymptotics turan_asymptotics(const TuranSpec& spec) {
    const int d = spec.d();
    if (!spec.valid() || spec.a < d + 1)
        throw input_error("turan_asymptotics: requires a valid spec with a >= d+1");
    for (std::size_t j = 1; j + 1 < spec.r.size(); ++j)
        if (spec.r[j] != 0)
            throw input_error("turan_asymptotics: interior blocks must be empty");
    const double a = static_cast<double>(spec.a);
    const int r0 = spec.r.front(), rd = spec.r.back();
    TuranAsymptotics out;
    if (d == 0) {
        // single block of r_0 clones: uniform weights
        out.x_star = 1.0 / r0;
        out.heavy_weight = 1.0 / r0;
        out.pi = std::log(a) + (1.0 - 1.0 / r0) * std::log((a + 1) / a);
        out.weighting.assign(r0, 1.0 / r0);
        return out;
    }
    const double num = std::log((a + 1) / a);
    const double den = rd * (r0 + 1) * std::log(a + 1) - rd * std::log(a) -
                       r0 * (rd - 1) * std::log(a - d + 1) - r0 * std::log(a - d);
    out.x_star = num / den;
    out.heavy_weight = (1.0 - rd * out.x_star) / r0;
    out.pi = std::log(a) + (1.0 - out.heavy_weight) * std::log((a + 1) / a);
    out.weighting.assign(spec.vertex_count(), out.x_star);
    for (int i = 0; i < r0; ++i) out.weighting[i] = out.heavy_weight;
    return out;
}

// Limit of the light-vertex weight as a grows.
inline double turan_x_star_limit(int r0, int rd, int d) {
    return 1.0 / (rd + r0 * (static_cast<double>(d) * rd + 1));
}

// ---- reductions and counting bounds -----------------------------------------

// Repeatedly deletes one endpoint of a pair whose multiplicity does not
// exceed the (uniform) loop value; the endpoint with the smaller weighted
// degree at an optimal weighting is removed, which preserves the density.
inline Pattern clone_reduce(const Pattern& p, Objective obj, std::vector<int>* kept = nullptr) {
    std::vector<int> alive(p.k());
    for (int i = 0; i < p.k(); ++i) alive[i] = i;
    Pattern cur = p;
    const std::uint32_t m0 = p.loop(0);
    for (int v = 1; v < p.k(); ++v)
        if (p.loop(v) != m0) throw input_error("clone_reduce: loops must be uniform");
    while (cur.k() >= 2) {
        int bu = -1, bv = -1;
        for (int u = 0; u < cur.k() && bu < 0; ++u)
            for (int v = u + 1; v < cur.k(); ++v)
                if (cur.pair(u, v) <= m0) { bu = u; bv = v; break; }
        if (bu < 0) break;
        int drop;
        if (obj == Objective::sum) {
            const SigmaResult r = sigma_density(cur);
            Rational du = 0, dv = 0;
            for (int j = 0; j < cur.k(); ++j) {
                if (j == bu || j == bv) continue;  // the mutual pair cancels out
                du += Rational(static_cast<long>(cur.pair(bu, j))) * r.weighting[j];
                dv += Rational(static_cast<long>(cur.pair(bv, j))) * r.weighting[j];
            }
            drop = (du >= dv) ? bv : bu;
        } else {
            const PiResult r = pi_density(cur);
            double du = 0, dv = 0;
            for (int j = 0; j < cur.k(); ++j) {
                if (j == bu || j == bv) continue;  // the mutual pair cancels out
                const double w = j < static_cast<int>(r.weighting.size()) ? r.weighting[j] : 0.0;
                if (w <= 0) continue;
                du += (cur.pair(bu, j) == 0 ? -1e9 : std::log((double)cur.pair(bu, j))) * w;
                dv += (cur.pair(bv, j) == 0 ? -1e9 : std::log((double)cur.pair(bv, j))) * w;
            }
            drop = (du >= dv) ? bv : bu;
        }
        std::vector<int> vs;
        for (int v = 0; v < cur.k(); ++v)
            if (v != drop) vs.push_back(v);
        cur = cur.induced(vs);
        alive.erase(alive.begin() + drop);
    }
    if (kept) *kept = alive;
    return cur;
}

// Density of a lifted graph splits over connected components; returns the
// component attaining the maximum (ties: first in vertex order).
inline SimpleGraph connected_reduce(const SimpleGraph& g, long a, Objective obj) {
    auto comps = g.components();
    if (comps.size() <= 1) return g;
    std::size_t best = 0;
    if (obj == Objective::sum) {
        Rational bv(-1);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const Rational s = sigma_density(lift_graph_pattern(comps[i], a)).sigma;
            if (s > bv) { bv = s; best = i; }
        }
    } else {
        double bv = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const double s = pi_density(lift_graph_pattern(comps[i], a)).pi;
            if (s > bv) { bv = s; best = i; }
        }
    }
    return comps[best];
}

// Upper bound on the number of vertices a connected graph can have while its
// lifted pattern attains its density: additive form (max_degree-1)/(sigma-a),
// multiplicative form ln((a+1)^D (a-1) / a^(D+1)) / (pi - ln a).
inline double vertex_count_bound(const SimpleGraph& g, long a, Objective obj) {
    if (g.n() == 0 || !g.connected())
        throw input_error("vertex_count_bound: graph must be connected and non-empty");
    const int delta = g.max_degree();
    if (obj == Objective::sum) {
        const Rational sigma = sigma_density(lift_graph_pattern(g, a)).sigma;
        const Rational excess = sigma - Rational(a);
        if (excess <= 0) throw input_error("vertex_count_bound: density does not exceed a");
        return rational_to_double(Rational(delta - 1) / excess);
    }
    if (a < 2) throw input_error("vertex_count_bound: multiplicative form needs a >= 2");
    const double pi = pi_density(lift_graph_pattern(g, a)).pi;
    const double da = static_cast<double>(a);
    const double excess = pi - std::log(da);
    if (excess <= 0) throw input_error("vertex_count_bound: density does not exceed ln a");
    const double num = delta * std::log(da + 1) + std::log(da - 1) - (delta + 1) * std::log(da);
    return num / excess;
}

// For a connected graph with maximum degree at most 3 and girth at least 5,
// the additive density of the lifted pattern is at most a + 1/5.
inline Rational subcubic_girth5_bound(const SimpleGraph& g, long a) {
    if (g.max_degree() > 3) throw input_error("subcubic_girth5_bound: maximum degree exceeds 3");
    if (g.girth() < 5) throw input_error("subcubic_girth5_bound: girth below 5");
    return Rational(a) + Rational(1, 5);
}

}  // namespace mgx
