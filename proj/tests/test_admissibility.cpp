#include <catch2/catch_amalgamated.hpp>

#include "mgx/admissibility.hpp"
#include "mgx/turan.hpp"

using namespace mgx;

TEST_CASE("a pattern is admissible exactly at its own blow-up maximum") {
    for (const char* name : {"K1_3", "C5", "K1_inf"}) {
        const Pattern p = named_pattern(name, 2);
        for (int s : {4, 6}) {
            const std::int64_t top = optimize_blowup(p, s, Objective::sum).sum_value;
            CHECK(is_admissible(p, s, top));
            CHECK_FALSE(is_admissible(p, s, top - 1));
            CHECK(is_admissible(p, s, top + 100));  // monotone in the budget
        }
    }
    CHECK_THROWS_AS(is_admissible(named_pattern("C5", 1), 1, 3), input_error);
}

TEST_CASE("admissibility thresholds separate the catalog at level 2") {
    // on s vertices the two-class pattern packs more than the lifted claw
    const int s = 8;
    const std::int64_t claw = optimize_blowup(named_pattern("K1_3", 2), s, Objective::sum).sum_value;
    const std::int64_t twoclass =
        optimize_blowup(named_pattern("K1_inf", 2), s, Objective::sum).sum_value;
    CHECK(claw < twoclass);
    CHECK(is_admissible(named_pattern("K1_3", 2), s, claw));
    CHECK_FALSE(is_admissible(named_pattern("K1_inf", 2), s, claw));
}

TEST_CASE("heavy subset scan on a balanced blow-up") {
    const Pattern p = named_pattern("K1_inf", 2);
    const Multigraph g = build_blowup(p, {3, 2});
    // this optimum is 4-regular in subset weight: every 4-set spans exactly 15
    const auto sets = find_heavy_sets(g, 4, 15);
    CHECK(sets.size() == 5);
    CHECK(sets.front() == std::vector<int>{0, 1, 2, 3});  // lexicographic order
    CHECK(find_heavy_sets(g, 4, 16).empty());
    CHECK(find_heavy_sets(g, 5, edge_sum(g)).size() == 1);
    CHECK_THROWS_AS(find_heavy_sets(g, 6, 1), input_error);
}
