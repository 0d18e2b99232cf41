#include <catch2/catch_amalgamated.hpp>

#include "mgx/blowup.hpp"
#include "mgx/turan.hpp"

using namespace mgx;

TEST_CASE("blow-up materialization agrees with the closed-form weights") {
    const Pattern p = named_pattern("K1_inf", 2);
    const Composition c{3, 2};
    const Multigraph g = build_blowup(p, c);
    REQUIRE(g.n() == 5);
    CHECK(g.mult(0, 1) == 2);  // heavy class clones
    CHECK(g.mult(3, 4) == 1);  // light class clones
    CHECK(g.mult(0, 4) == 3);  // cross pair
    CHECK(edge_sum(g) == blowup_sum(p, c));
    CHECK(edge_profile(g).compare(blowup_profile(p, c)) == 0);
    CHECK(blowup_profile(p, c).product() == 5832);
    CHECK_THROWS_AS(build_blowup(p, {1, 2, 3}), input_error);
}

TEST_CASE("exact optimizer: two-class pattern on five vertices") {
    const Pattern p = named_pattern("K1_inf", 2);
    const BlowupOptimum prod = optimize_blowup(p, 5, Objective::product);
    CHECK(prod.exact);
    CHECK(prod.profile.product() == 5832);
    CHECK(prod.witness == Composition{3, 2});
    const BlowupOptimum sum = optimize_blowup(p, 4, Objective::sum);
    CHECK(sum.sum_value == turan_sigma_value({{1, 1}, 2}, 4));
}

TEST_CASE("exact optimizer: claw pattern attains the floor formula") {
    // largest blow-up weight of the lifted claw at a=1 on s vertices:
    // C(s,2) + floor(s^2/10 + s/2)
    const Pattern p = named_pattern("K1_3", 1);
    for (int s : {5, 8, 10, 13}) {
        const BlowupOptimum opt = optimize_blowup(p, s, Objective::sum);
        const std::int64_t floor_term = (static_cast<std::int64_t>(s) * s + 5 * s) / 10;
        CHECK(opt.sum_value == choose2(s) + floor_term);
    }
    const BlowupOptimum opt = optimize_blowup(p, 10, Objective::sum);
    CHECK(opt.sum_value == 60);
    CHECK(opt.witness == Composition{4, 2, 2, 2});  // lexicographically smallest optimum
}

TEST_CASE("normalized blow-up weight is non-increasing in n") {
    for (const char* name : {"K1_3", "C5", "K1_inf"}) {
        const Pattern p = named_pattern(name, 2);
        Rational prev;
        bool first = true;
        for (int n = 2; n <= 16; ++n) {
            const Rational cur(optimize_blowup(p, n, Objective::sum).sum_value, choose2(n));
            if (!first) CHECK(cur <= prev);
            prev = cur;
            first = false;
        }
    }
}

TEST_CASE("uniform-loop cap on blow-up weights") {
    // patterns with all loops equal to c satisfy
    //   max weight at s <= floor(sigma s^2/2 - c s/2),
    // with equality when the optimal weighting times s is integral
    for (const auto& [name, g] : c5_family()) {
        INFO(name);
        const Pattern p = lift_graph_pattern(g, 1);
        const Rational sigma = sigma_density(p).sigma;
        for (int s : {6, 10}) {
            const Rational cap = sigma * s * s / 2 - Rational(0) * s / 2;  // c = a-1 = 0
            const BigInt floor_cap = boost::multiprecision::numerator(cap) /
                                     boost::multiprecision::denominator(cap);
            CHECK(BigInt(optimize_blowup(p, s, Objective::sum).sum_value) <= floor_cap);
        }
    }
    // integral optimum: the claw at s=10 meets the cap exactly
    const Pattern claw = lift_graph_pattern(star_graph(3), 1);
    CHECK(optimize_blowup(claw, 10, Objective::sum).sum_value == 60);
}

TEST_CASE("local mode is a certified lower bound that is often tight") {
    const Pattern p = named_pattern("Petersen", 2);
    const BlowupOptimum local = optimize_blowup(p, 12, Objective::sum, OptMode::local);
    CHECK_FALSE(local.exact);
    const BlowupOptimum exact = optimize_blowup(p, 12, Objective::sum);
    CHECK(local.sum_value <= exact.sum_value);
    CHECK(exact.sum_value - local.sum_value <= 1);  // rounded weighting is near-optimal
}

TEST_CASE("node budget is enforced") {
    const Pattern p = named_pattern("Petersen", 2);
    CHECK_THROWS_AS(optimize_blowup(p, 20, Objective::sum, OptMode::exact, 10), budget_error);
}

TEST_CASE("layered clique closed forms match the optimizer") {
    const std::vector<TuranSpec> specs = {
        {{1, 1}, 2}, {{1, 1}, 3}, {{2, 1}, 3}, {{1, 2}, 3}, {{2, 2}, 4},
        {{1, 0, 1}, 3}, {{1, 0, 1}, 4}, {{2}, 1}, {{3}, 2}};
    for (const TuranSpec& spec : specs) {
        INFO("a=" << spec.a);
        const Pattern p = make_turan_pattern(spec);
        for (int n = 0; n <= 14; ++n)
            CHECK(turan_sigma_value(spec, n) ==
                  optimize_blowup(p, n, Objective::sum).sum_value);
        for (int n = 1; n <= 13; ++n)
            CHECK(turan_delta(spec, n) ==
                  turan_sigma_value(spec, n + 1) - turan_sigma_value(spec, n));
    }
    CHECK_THROWS_AS(turan_sigma_value({{1, 1, 1}, 3}, 5), input_error);  // unsupported shape
}

TEST_CASE("milestone sizes and growth bound of the increments") {
    const TuranSpec spec{{1, 1}, 2};  // r0 = rd = d = 1
    CHECK(turan_s0(spec) == 4);
    CHECK(turan_s1(spec) == 5);
    const TuranSpec spec2{{2, 0, 2}, 5};  // r0 = 2, rd = 2, d = 2
    CHECK(turan_s0(spec2) == 13);
    CHECK(turan_s1(spec2) == 20);
    // strict growth bound: delta(n) < (a+1 - (d rd + 1)/(s0-1)) n + 1
    for (const TuranSpec& s : {spec, spec2, TuranSpec{{2, 1}, 4}}) {
        const int s0 = turan_s0(s);
        const double slope = s.a + 1 - (static_cast<double>(s.d()) * s.r.back() + 1) / (s0 - 1);
        for (int n = 1; n <= 3 * s0; ++n)
            CHECK(static_cast<double>(turan_delta(s, n)) < slope * n + 1);
    }
}

TEST_CASE("light clone counts in optimal blow-ups") {
    const TuranSpec spec{{1, 1}, 3};
    const Pattern p = make_turan_pattern(spec);
    for (int n = 1; n <= 12; ++n) {
        const auto [lo, hi] = turan_light_count_range(spec, n);
        CHECK(lo <= hi);
        CHECK(hi <= lo + 1);
        // scan all optimal compositions for their light totals
        std::int64_t best = optimize_blowup(p, n, Objective::sum).sum_value;
        bool in_range = false;
        for (int light = 0; light <= n; ++light)
            if (blowup_sum(p, {n - light, light}) == best && lo <= light && light <= hi)
                in_range = true;
        CHECK(in_range);
    }
    CHECK_THROWS_AS(turan_light_count_range({{2}, 1}, 5), input_error);
}

TEST_CASE("regular degrees in the optimum at the critical size") {
    CHECK(heavy_degree_check({{1, 1}, 3}));   // (r0, rd, d) = (1, 1, 1), a = d+2
    CHECK(heavy_degree_check({{2, 1}, 3}));   // (2, 1, 1)
    CHECK_THROWS_AS(heavy_degree_check({{3}, 2}), input_error);
}
