#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "sbe/graph.hpp"

using namespace sbe;

TEST_CASE("parse edge-list format") {
    Graph g = parse_graph("3 2\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("parse dimacs format") {
    Graph g = parse_graph("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("parse errors name the line") {
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n1 1\n"), doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n1 5\n"), doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n1 2\n2 1\n"), doctest::Contains("line 3"),
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n1 2 9\n2 3\n"), doctest::Contains("line 2"),
                         parse_error);
    CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), parse_error);    // fewer edges than declared
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 x\n"), parse_error);
    CHECK_THROWS_AS(parse_graph(""), parse_error);
}

TEST_CASE("12-vertex fixture parses to 33 edges with the table's rows") {
    Graph g = fixtures::twelve_vertex_graph();
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 33);
    const auto& rows = fixtures::twelve_vertex_rows();
    for (int v = 1; v <= 12; ++v) CHECK(g.neighbors(v) == rows[v - 1]);
}

TEST_CASE("write/parse round trip is exact") {
    for (int i = 0; i < 12; ++i) {
        Graph g = fixtures::seeded_gnm(0xA11CE, i, 1, 16);
        for (GraphFormat fmt : {GraphFormat::edge_list, GraphFormat::dimacs}) {
            const std::string text = write_graph(g, fmt);
            Graph back = parse_graph(text);
            CHECK(back == g);
            CHECK(write_graph(back, fmt) == text);
        }
    }
}

TEST_CASE("path generator") {
    Graph g = path_graph(5);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(path_graph(1).edge_count() == 0);
    CHECK_THROWS_AS(path_graph(0), argument_error);
}

TEST_CASE("cycle and complete generators") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle_graph(2), argument_error);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(complete_graph(1).edge_count() == 0);
}

TEST_CASE("moebius ladder: cycle plus rungs, m = 3n/2") {
    Graph g = moebius_ladder(48);
    CHECK(g.vertex_count() == 48);
    CHECK(g.edge_count() == 72);
    Graph m8 = moebius_ladder(8);
    CHECK(m8.edge_count() == 12);
    for (int v = 1; v <= 8; ++v) CHECK(m8.degree(v) == 3);
    CHECK(m8.has_edge(1, 5));
    CHECK(m8.has_edge(1, 8));
    CHECK_THROWS_AS(moebius_ladder(7), argument_error);
    CHECK_THROWS_AS(moebius_ladder(2), argument_error);
}

TEST_CASE("gnm generator: exact size, reproducible") {
    Graph g = gnm_graph(24, 83, 7);
    CHECK(g.vertex_count() == 24);
    CHECK(g.edge_count() == 83);
    CHECK(gnm_graph(24, 83, 7) == g);
    CHECK_FALSE(gnm_graph(24, 83, 8) == g);
    CHECK(gnm_graph(10, 0, 1).edge_count() == 0);
    CHECK(gnm_graph(5, 10, 3) == complete_graph(5));
    CHECK_THROWS_AS(gnm_graph(5, 11, 0), argument_error);
    CHECK_THROWS_AS(gnm_graph(5, -1, 0), argument_error);
}

TEST_CASE("regular generator: every degree d, reproducible") {
    for (auto [n, d] : {std::pair{8, 3}, {10, 4}, {48, 18}, {6, 5}, {9, 0}}) {
        Graph g = regular_graph(n, d, 42);
        CHECK(g.vertex_count() == n);
        for (int v = 1; v <= n; ++v) CHECK(g.degree(v) == d);
        CHECK(regular_graph(n, d, 42) == g);
    }
    CHECK(regular_graph(6, 5, 0) == complete_graph(6));
    CHECK_THROWS_AS(regular_graph(5, 3, 0), argument_error); // nd odd
    CHECK_THROWS_AS(regular_graph(5, 5, 0), argument_error);
}

TEST_CASE("apollonian generator: planar triangulation counts") {
    CHECK(apollonian_graph(3, 0).edge_count() == 3);
    for (std::uint64_t seed : {0ull, 9ull}) {
        Graph g = apollonian_graph(48, seed);
        CHECK(g.edge_count() == 3 * 48 - 6);
        CHECK(g.min_degree() >= 3);
        CHECK(apollonian_graph(48, seed) == g);
    }
    CHECK_THROWS_AS(apollonian_graph(2, 0), argument_error);
}

TEST_CASE("generate dispatcher") {
    GenSpec spec;
    spec.family = Family::gnm;
    spec.n = 12;
    spec.m = 20;
    spec.seed = 5;
    CHECK(generate(spec) == gnm_graph(12, 20, 5));
    CHECK(family_from_string("moebius") == Family::moebius);
    CHECK_THROWS_AS(family_from_string("torus"), argument_error);
}

TEST_CASE("reorder_by_degree reproduces the reference mapping tables") {
    Graph g = fixtures::twelve_vertex_graph();

    auto [desc, desc_map] = reorder_by_degree(g, DegreeOrder::descending);
    CHECK(desc_map.forward == fixtures::twelve_vertex_descending_forward());

    auto [asc, asc_map] = reorder_by_degree(g, DegreeOrder::ascending);
    CHECK(asc_map.forward == fixtures::twelve_vertex_ascending_forward());

    // spot-check the relabeled adjacency: new vertex 1 descending is old 8
    CHECK(desc.degree(1) == 8);
    CHECK(asc.degree(1) == 4);
}

TEST_CASE("reorder_by_degree on an edgeless graph is the identity") {
    Graph g = gnm_graph(6, 0, 0);
    for (DegreeOrder d : {DegreeOrder::descending, DegreeOrder::ascending}) {
        auto [h, map] = reorder_by_degree(g, d);
        CHECK(h == g);
        CHECK(map.forward == VertexMapping::identity(6).forward);
    }
}

TEST_CASE("reorder_by_degree preserves structure") {
    for (int i = 0; i < 10; ++i) {
        Graph g = fixtures::seeded_gnm(0xBEEF, i, 2, 14);
        for (DegreeOrder d : {DegreeOrder::descending, DegreeOrder::ascending}) {
            auto [h, map] = reorder_by_degree(g, d);
            CHECK(h.edge_count() == g.edge_count());

            std::multiset<int> before, after;
            for (int v = 1; v <= g.vertex_count(); ++v) {
                before.insert(g.degree(v));
                after.insert(h.degree(v));
                CHECK(map.inverse[map.forward[v]] == v);
            }
            CHECK(before == after);
            for (const auto& e : g.edges())
                CHECK(h.has_edge(map.forward[e.u], map.forward[e.v]));
        }
    }
}

TEST_CASE("is_independent") {
    Graph p5 = path_graph(5);
    CHECK(is_independent(p5, VertexSubset(5)));
    CHECK(is_independent(p5, VertexSubset::of(5, {3})));
    CHECK_FALSE(is_independent(p5, VertexSubset::of(5, {1, 2})));
    CHECK(is_independent(p5, VertexSubset::of(5, {1, 3, 5})));

    Graph g12 = fixtures::twelve_vertex_graph();
    CHECK(is_independent(g12, VertexSubset::of(12, {2, 3})));
    CHECK_FALSE(is_independent(g12, VertexSubset::of(12, {2, 4})));

    CHECK_THROWS_AS(is_independent(p5, VertexSubset::of(9, {7})), argument_error);
}
