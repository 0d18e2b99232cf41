#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mgx/blowup.hpp"
#include "mgx/oracle.hpp"

using namespace mgx;

TEST_CASE("uniform multigraphs are extremal at exact budgets") {
    // when q = a C(s,2), the all-a multigraph is optimal for both objectives
    for (long a : {1, 2}) {
        for (int s : {3, 4}) {
            for (int n = s; n <= 5; ++n) {
                INFO("a=" << a << " s=" << s << " n=" << n);
                const std::int64_t q = a * choose2(s);
                const OracleResult sum = brute_force_extremal(n, s, q, Objective::sum);
                CHECK(sum.exact);
                CHECK(sum.sum_value == a * choose2(n));
                const OracleResult prod = brute_force_extremal(n, s, q, Objective::product);
                CHECK(prod.exact);
                BigInt want = 1;
                for (int i = 0; i < choose2(n); ++i) want *= a;
                CHECK(prod.profile.product() == want);
                // the witness must itself satisfy the subset condition
                CHECK(is_sq_graph(prod.witness, s, q).ok);
            }
        }
    }
}

TEST_CASE("the five-vertex product optimum is a pattern blow-up") {
    const OracleResult r = brute_force_extremal(5, 4, 15, Objective::product);
    CHECK(r.exact);
    CHECK(is_sq_graph(r.witness, 4, 15).ok);
    // the two-class blow-up on (3,2) gives 5832, but the lifted 5-cycle is
    // better: multiplicity 3 on the cycle and 2 on the chords reaches 7776
    const MultiplicityProfile twoclass = blowup_profile(named_pattern("K1_inf", 2), {3, 2});
    CHECK(twoclass.product() == 5832);
    CHECK(r.profile.compare(twoclass) > 0);
    const MultiplicityProfile cyc = blowup_profile(named_pattern("C5", 2), {1, 1, 1, 1, 1});
    CHECK(r.profile.compare(cyc) == 0);
    CHECK(r.profile.product() == 7776);
}

TEST_CASE("normalized extremal values are monotone in n") {
    for (int s : {3, 4}) {
        const std::int64_t q = 2 * choose2(s) + 1;
        double prev_sum = 1e18, prev_log = 1e18;
        for (int n = s; n <= 5; ++n) {
            const OracleResult sum = brute_force_extremal(n, s, q, Objective::sum);
            const OracleResult prod = brute_force_extremal(n, s, q, Objective::product);
            const double ds = static_cast<double>(sum.sum_value) / choose2(n);
            const double dl = prod.profile.log_value() / choose2(n);
            CHECK(ds <= prev_sum + 1e-12);
            CHECK(dl <= prev_log + 1e-12);
            prev_sum = ds;
            prev_log = dl;
        }
    }
}

TEST_CASE("averaging inequality holds between consecutive oracle values") {
    const int s = 3;
    const std::int64_t q = 4;
    std::int64_t prev = -1;
    for (int n = s; n <= 5; ++n) {
        const std::int64_t cur = brute_force_extremal(n, s, q, Objective::sum).sum_value;
        if (prev >= 0) CHECK(cur <= (static_cast<std::int64_t>(n)) * prev / (n - 2));
        prev = cur;
    }
}

TEST_CASE("witness is the lexicographically smallest optimal assignment") {
    // one triangle, budget 5: any distribution of 5 over three edges is
    // optimal; the smallest in edge order is (0, 0, 5)
    const OracleResult r = brute_force_extremal(3, 3, 5, Objective::sum);
    CHECK(r.sum_value == 5);
    CHECK(r.witness.mult(0, 1) == 0);
    CHECK(r.witness.mult(0, 2) == 0);
    CHECK(r.witness.mult(1, 2) == 5);
}

TEST_CASE("results are independent of the thread count") {
    for (Objective obj : {Objective::sum, Objective::product}) {
        const OracleResult one = brute_force_extremal(5, 4, 13, obj, 0, 1);
        const OracleResult four = brute_force_extremal(5, 4, 13, obj, 0, 4);
        CHECK(one.sum_value == four.sum_value);
        CHECK(one.profile.compare(four.profile) == 0);
        CHECK(one.witness.weights() == four.witness.weights());
    }
}

TEST_CASE("multiplicity cap and degenerate budgets") {
    // cap 1 turns the problem into a simple-graph question
    const OracleResult r = brute_force_extremal(4, 3, 6, Objective::sum, 1);
    CHECK(r.sum_value == 6);
    // budget below C(s,2) forces a zero product
    const OracleResult z = brute_force_extremal(4, 3, 2, Objective::product);
    CHECK(z.profile.product() == 0);
    CHECK(z.sum_value == 0);  // all-zero witness is the lexicographic minimum
    CHECK_THROWS_AS(brute_force_extremal(3, 4, 5), input_error);
    CHECK_THROWS_AS(brute_force_extremal(4, 1, 5), input_error);
}

TEST_CASE("exhausted node budgets are reported as lower bounds") {
    const OracleResult r = brute_force_extremal(5, 4, 12, Objective::sum, 0, 1, 50);
    CHECK_FALSE(r.exact);
    CHECK(r.sum_value <= brute_force_extremal(5, 4, 12, Objective::sum).sum_value);
}
