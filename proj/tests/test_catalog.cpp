#include <catch2/catch_amalgamated.hpp>

#include "mgx/catalog.hpp"
#include "mgx/io.hpp"

using namespace mgx;

TEST_CASE("layered clique pattern entries") {
    // two singleton blocks at levels 0 and 1
    const Pattern p = make_turan_pattern({{1, 1}, 2});
    REQUIRE(p.k() == 2);
    CHECK(p.loop(0) == 2);
    CHECK(p.loop(1) == 1);
    CHECK(p.pair(0, 1) == 3);

    // single block: r clones with loop a and pair a+1
    const Pattern q = make_turan_pattern({{3}, 2});
    for (int v = 0; v < 3; ++v) CHECK(q.loop(v) == 2);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) CHECK(q.pair(u, v) == 3);

    // a = 0, d = 0 degenerates to the clique pattern of the r-partite graph
    const Pattern t = make_turan_pattern({{4}, 0});
    for (int v = 0; v < 4; ++v) CHECK(t.loop(v) == 0);
    CHECK(t.pair(0, 3) == 1);

    // blocks separated by an empty level
    const Pattern w = make_turan_pattern({{2, 0, 1}, 3});
    REQUIRE(w.k() == 3);
    CHECK(w.loop(0) == 3);
    CHECK(w.loop(2) == 1);
    CHECK(w.pair(0, 1) == 4);  // inside the heavy block
    CHECK(w.pair(0, 2) == 4);  // heavy to light
}

TEST_CASE("layered clique spec validation") {
    CHECK_THROWS_AS(make_turan_pattern({{}, 2}), input_error);
    CHECK_THROWS_AS(make_turan_pattern({{0, 1}, 2}), input_error);
    CHECK_THROWS_AS(make_turan_pattern({{1, 1}, 0}), input_error);  // a < d
    CHECK(make_turan_pattern({{1, 1}, 1}).loop(1) == 0);            // a = d allowed
}

TEST_CASE("lifting a simple graph") {
    const Pattern p = lift_graph_pattern(cycle_graph(5), 1);
    for (int v = 0; v < 5; ++v) CHECK(p.loop(v) == 0);
    CHECK(p.pair(0, 1) == 2);  // edge
    CHECK(p.pair(0, 2) == 1);  // non-edge
    CHECK_THROWS_AS(lift_graph_pattern(cycle_graph(5), 0), input_error);
}

TEST_CASE("hardcoded graphs have the advertised parameters") {
    const SimpleGraph pet = petersen_graph();
    CHECK(pet.n() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(pet.girth() == 5);
    CHECK(pet.connected());

    const SimpleGraph cl = clebsch_graph();
    CHECK(cl.n() == 16);
    CHECK(cl.edge_count() == 40);
    for (int v = 0; v < 16; ++v) CHECK(cl.degree(v) == 5);
    CHECK(cl.girth() == 4);  // triangle-free
    CHECK(cl.connected());

    const SimpleGraph h26 = h26_graph();
    CHECK(h26.n() == 26);
    CHECK(h26.edge_count() == 52);
    for (int v = 0; v < 26; ++v) CHECK(h26.degree(v) == 4);
    CHECK(h26.girth() == 6);
    CHECK(h26.connected());

    for (const auto& [name, g] : c5_family()) {
        INFO(name);
        CHECK(g.max_degree() <= 3);
        CHECK(g.girth() >= 5);  // forests report a huge girth
        CHECK(g.connected());
    }
    CHECK(h6_graph().edge_count() == 5);
    CHECK(h7_graph().edge_count() == 8);
    CHECK(h9_graph().edge_count() == 12);
}

TEST_CASE("named patterns") {
    const Pattern claw = named_pattern("K1_3", 1);
    CHECK(claw.k() == 4);
    CHECK(claw.pair(0, 1) == 2);
    CHECK(claw.pair(1, 2) == 1);

    const Pattern p2 = named_pattern("Pplus2", 2);
    CHECK(p2.k() == 2);
    CHECK(p2.pair(0, 1) == 4);
    CHECK(p2.loop(0) == 1);

    const Pattern ki = named_pattern("K1_inf", 2);
    CHECK(ki == make_turan_pattern({{1, 1}, 2}));

    CHECK(named_pattern("C5", 1).k() == 5);
    CHECK(named_pattern("P4", 1).k() == 4);
    CHECK(named_pattern("Petersen", 2).k() == 10);
    CHECK_THROWS_AS(named_pattern("Q17", 2), input_error);
    CHECK_THROWS_AS(named_pattern("Pplus2", 0), input_error);
}

TEST_CASE("spec ordering is a strict total order") {
    const TuranSpec a{{1, 1}, 2}, b{{1, 2}, 2}, c{{1, 1, 1}, 2}, e{{1, 1}, 3};
    CHECK(turan_order_compare(a, b) == std::strong_ordering::less);
    CHECK(turan_order_compare(a, c) == std::strong_ordering::less);  // prefix first
    CHECK(turan_order_compare(b, c) == std::strong_ordering::greater);
    CHECK(turan_order_compare(a, e) == std::strong_ordering::less);  // a dominates
    CHECK(turan_order_compare(a, a) == std::strong_ordering::equal);
}

TEST_CASE("pattern json round trip and shorthands") {
    const Pattern p = named_pattern("K1_inf", 2);
    CHECK(pattern_from_json(pattern_to_json(p)) == p);
    CHECK(pattern_from_json(nlohmann::json::parse(
              R"({"turan": {"r": [1, 1], "a": 2}})")) == p);
    CHECK(pattern_from_json(nlohmann::json::parse(
              R"({"named": "K1_inf", "a": 2})")) == p);
    const Pattern q = pattern_from_json(nlohmann::json::parse(
        R"({"vertices": 3, "loops": [1, 1, 1], "edges": [[0, 1, 4]]})"));
    CHECK(q.pair(0, 1) == 4);
    CHECK(q.pair(0, 2) == 0);  // unlisted pairs default to zero
    CHECK_THROWS_AS(pattern_from_json(nlohmann::json::parse(R"({"vertices": 2})")),
                    input_error);
    CHECK_THROWS_AS(pattern_from_json(nlohmann::json::parse(
                        R"({"vertices": 2, "loops": [1], "edges": []})")),
                    input_error);
}
