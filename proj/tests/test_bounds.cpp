#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mgx/bounds.hpp"

using namespace mgx;

TEST_CASE("integer split maximizing a product with fixed total") {
    const AmGmSplit s = integer_am_gm_max(5, 17);
    CHECK(s.base == 3);
    CHECK(s.count_base == 3);
    CHECK(s.count_base_plus_1 == 2);
    CHECK(integer_am_gm_product(5, 17) == 3 * 3 * 3 * 4 * 4);
    // exhaustive check: no 3-part split of totals up to 15 beats the balanced one
    for (int total = 0; total <= 15; ++total) {
        BigInt best = 0;
        for (int x = 0; x <= total; ++x)
            for (int y = 0; x + y <= total; ++y) {
                const int z = total - x - y;
                best = std::max(best, BigInt(x) * y * z);
            }
        CHECK(integer_am_gm_product(3, total) == best);
    }
    CHECK_THROWS_AS(integer_am_gm_max(0, 5), input_error);
}

TEST_CASE("averaging recurrence propagates upper bounds") {
    const BoundTable t = averaging_propagate(4, 15, 10);
    CHECK(t.at(4) == 15);
    CHECK(t.at(5) == 15 * 5 / 3);
    for (int n = 4; n < 10; ++n)
        CHECK(t.at(n + 1) == (n + 1) * t.at(n) / (n - 1));
    CHECK_THROWS_AS(t.at(11), input_error);
    CHECK_THROWS_AS(averaging_propagate(1, 5, 3), input_error);
}

TEST_CASE("self-improving check certifies closed-form dominance") {
    // the flat-interval upper bound a C(n,2) + ex(n, K_{r+1}) + floor((n-1)/r) - 1
    // propagates itself under averaging
    for (int r = 1; r <= 3; ++r)
        for (long a = 1; a <= 3; ++a) {
            BoundTable t;
            t.start_n = 2 * r + 1;
            for (int n = t.start_n; n <= 200; ++n)
                t.values.push_back(a * choose2(n) + turan_graph_edges(n, r) + (n - 1) / r - 1);
            INFO("r=" << r << " a=" << a);
            CHECK(averaging_self_check(t));
        }
    // a function that grows too slowly fails the check
    BoundTable bad;
    bad.start_n = 5;
    for (int n = 5; n <= 10; ++n) bad.values.push_back(100);
    CHECK_FALSE(averaging_self_check(bad));
}

TEST_CASE("least slope exceeding the budget") {
    CHECK(fk_m(3, 2) == Rational(1, 2));
    CHECK(fk_m(2, 7) == Rational(7));
    CHECK(fk_m(3, 3) == Rational(1));
    // brute float sanity check on a grid
    for (int s = 3; s <= 6; ++s)
        for (int q = 1; q <= 12; ++q) {
            const Rational m = fk_m(s, q);
            auto total = [&](double x) {
                std::int64_t t = 0;
                for (int i = 1; i < s; ++i)
                    t += static_cast<std::int64_t>(std::floor(1 + x * i + 1e-12));
                return t;
            };
            CHECK(total(rational_to_double(m)) > q);
            CHECK(total(rational_to_double(m) - 1e-6) <= q);
        }
}

TEST_CASE("flat interval of the multiplicative extremal function") {
    const FlatInterval f = flat_interval(2, 2, 5);
    CHECK(f.q_low == 2 * choose2(5) + turan_graph_edges(5, 2));
    CHECK(f.q_high == f.q_low + (5 - 1) / 2 - 1);
    CHECK(f.value == Catch::Approx(2 * std::sqrt(1.5)).margin(1e-12));
    // r = 1: the flat value is a itself
    const FlatInterval g = flat_interval(1, 3, 4);
    CHECK(g.value == Catch::Approx(3.0).margin(1e-12));
    CHECK(g.q_low == 3 * choose2(4));
    CHECK(g.q_high == g.q_low + 2);
    CHECK_THROWS_AS(flat_interval(2, 2, 4), input_error);  // s below 2r+1
}

TEST_CASE("flat value equals the density of the single-block pattern") {
    for (int r = 1; r <= 3; ++r)
        for (long a = 1; a <= 3; ++a) {
            const FlatInterval f = flat_interval(r, a, 2 * r + 1);
            const double pi = pi_density(make_turan_pattern({{r}, a})).pi;
            CHECK(std::log(f.value) == Catch::Approx(pi).margin(1e-9));
        }
}

TEST_CASE("polynomial gate: exact and analytic forms agree") {
    // spot value: r_d = 1, d = 1, a = 2 gives 9 * 1 >= 8
    const GateResult g = large_a_gate(1, 1, 1, 2);
    CHECK(g.exact_cmp == 1);
    CHECK(g.gate);
    CHECK(g.equiv_b);
    CHECK(g.equiv_c);
    CHECK(g.threshold == 2);  // d^2 + d for r_d = 1

    for (int r0 = 1; r0 <= 3; ++r0)
        for (int rd = 1; rd <= 3; ++rd)
            for (int d = 1; d <= 3; ++d)
                for (long a = d + 1; a <= gate_threshold(rd, d) + 3; ++a) {
                    const GateResult r = large_a_gate(r0, rd, d, a);
                    INFO("r0=" << r0 << " rd=" << rd << " d=" << d << " a=" << a);
                    if (!r.boundary_b) CHECK(r.gate == r.equiv_b);
                    if (!r.boundary_c) CHECK(r.gate == r.equiv_c);
                    if (a > r.threshold) CHECK(r.gate);
                    // strictness carries over between the forms
                    if (r.exact_cmp > 0 && !r.boundary_b) CHECK(r.margin_b > 0);
                    if (r.exact_cmp < 0 && !r.boundary_b) CHECK(r.margin_b < 0);
                }
    CHECK_THROWS_AS(large_a_gate(1, 1, 2, 2), input_error);  // needs a >= d+1
}

TEST_CASE("gate threshold for single light blocks is d^2 + d") {
    for (int d = 1; d <= 6; ++d) CHECK(gate_threshold(1, d) == d * (d + 1));
}
