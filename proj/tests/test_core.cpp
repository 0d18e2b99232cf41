#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mgx/multigraph.hpp"

using namespace mgx;

TEST_CASE("pair indexing is lexicographic and symmetric") {
    const int n = 6;
    std::size_t expect = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++expect) {
            CHECK(pair_index(u, v, n) == expect);
            CHECK(pair_index(v, u, n) == expect);
        }
    CHECK(expect == static_cast<std::size_t>(choose2(n)));
}

TEST_CASE("multigraph accessors and immutability") {
    Multigraph g(4);
    CHECK(edge_sum(g) == 0);
    const Multigraph h = g.with_edge(1, 3, 5).with_edge(0, 1, 2);
    CHECK(g.mult(1, 3) == 0);
    CHECK(h.mult(1, 3) == 5);
    CHECK(h.mult(3, 1) == 5);
    CHECK(edge_sum(h) == 7);
    CHECK_THROWS_AS(h.mult(2, 2), input_error);
    CHECK_THROWS_AS(Multigraph(3, {1, 2}), input_error);
}

TEST_CASE("edge profile tracks counts, product, and zeros") {
    Multigraph g(4);
    g = g.with_edge(0, 1, 3).with_edge(0, 2, 3).with_edge(0, 3, 2);
    // remaining three pairs have multiplicity 0
    const MultiplicityProfile p = edge_profile(g);
    CHECK(p.counts().at(3) == 2);
    CHECK(p.counts().at(2) == 1);
    CHECK(p.counts().at(0) == 3);
    CHECK(p.is_zero());
    CHECK(edge_product(g) == 0);
    CHECK(p.log_value() == -std::numeric_limits<double>::infinity());

    MultiplicityProfile a, b;
    a.add(2, 3);             // 2^3 = 8
    b.add(8, 1);             // 8
    CHECK(a.compare(b) == 0);  // exact tie despite different shapes
    b.add(1, 5);
    CHECK(a.compare(b) == 0);  // multiplying by 1s changes nothing
    b.add(3, 1);
    CHECK(a.compare(b) < 0);
    CHECK(b.product() == 24);
}

TEST_CASE("subset condition accepts the balanced example") {
    // two-class blow-up: 3 clones of a loop-2 vertex, 2 clones of a loop-1
    // vertex, cross multiplicity 3
    Multigraph g(5);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) g = g.with_edge(u, v, 2);
    g = g.with_edge(3, 4, 1);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 5; ++v) g = g.with_edge(u, v, 3);
    CHECK(edge_sum(g) == 3 * 2 + 1 + 6 * 3);
    CHECK(is_sq_graph(g, 4, 15).ok);
    const SqCheckResult bad = is_sq_graph(g, 4, 14);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness_sum > 14);
    // the first 4-subset in lexicographic order is already violating here
    CHECK(*bad.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("subset condition domain handling") {
    Multigraph g(3);
    CHECK_THROWS_AS(is_sq_graph(g, 4, 10), input_error);
    CHECK(is_sq_graph(g, 4, 10, true).ok);  // vacuous when explicitly allowed
    CHECK_THROWS_AS(is_sq_graph(g, 1, 10), input_error);
}

TEST_CASE("text format round trip") {
    Multigraph g(5);
    g = g.with_edge(0, 4, 7).with_edge(2, 3, 1);
    const std::string text = format_multigraph(g);
    const Multigraph h = parse_multigraph(text);
    CHECK(h.n() == 5);
    CHECK(h.weights() == g.weights());
    CHECK_THROWS_AS(parse_multigraph("3\n2 1 5\n"), input_error);  // u >= v
    CHECK_THROWS_AS(parse_multigraph("3\n0 3 5\n"), input_error);  // out of range
    CHECK_THROWS_AS(parse_multigraph("-1\n"), input_error);
}

TEST_CASE("handshake identity on random multigraphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v, rng() % 6);
        std::int64_t degsum = 0;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (u != v) degsum += g.mult(std::min(u, v), std::max(u, v));
        CHECK(degsum == 2 * edge_sum(g));
        // the full vertex set is always a witnessable subset
        CHECK(subset_sum(g, [&] {
                  std::vector<int> all(n);
                  for (int i = 0; i < n; ++i) all[i] = i;
                  return all;
              }()) == edge_sum(g));
    }
}
