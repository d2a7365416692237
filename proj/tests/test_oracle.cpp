#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "sbe/oracle.hpp"

using namespace sbe;

TEST_CASE("brute_all_independent_sets") {
    CHECK(brute_all_independent_sets(path_graph(3)).total_count() == 4);
    auto k4 = brute_all_independent_sets(complete_graph(4));
    CHECK(k4.total_count() == 4);
    CHECK(k4.mu() == 1);
    CHECK_THROWS_AS(brute_all_independent_sets(gnm_graph(25, 0, 0)), argument_error);
}

TEST_CASE("brute_mis") {
    auto p5 = brute_mis(path_graph(5));
    CHECK(p5.alpha == 3);
    REQUIRE(p5.sets.size() == 1);
    CHECK(p5.sets[0] == VertexSubset::of(5, {1, 3, 5}));

    CHECK(brute_mis(gnm_graph(6, 0, 0)).alpha == 6);
    CHECK(brute_mis(moebius_ladder(8)).alpha == 3);
}

TEST_CASE("brute_chromatic") {
    auto k4 = brute_chromatic(complete_graph(4));
    CHECK(k4.chi == 4);
    CHECK(k4.partitions.size() == 1);

    CHECK(brute_chromatic(path_graph(5)).chi == 2);
    CHECK(brute_chromatic(cycle_graph(5)).chi == 3);
    CHECK(brute_chromatic(gnm_graph(1, 0, 0)).chi == 1);
    CHECK_THROWS_AS(brute_chromatic(gnm_graph(13, 0, 0)), argument_error);
}

TEST_CASE("oracle results are invariant under relabeling") {
    for (int i = 0; i < 10; ++i) {
        Graph g = fixtures::seeded_gnm(0x909, i, 1, 9);
        for (DegreeOrder d : {DegreeOrder::descending, DegreeOrder::ascending}) {
            auto [h, map] = reorder_by_degree(g, d);
            CHECK(brute_mis(g).alpha == brute_mis(h).alpha);
            CHECK(brute_all_independent_sets(g).total_count() ==
                  brute_all_independent_sets(h).total_count());
            if (g.vertex_count() <= 8)
                CHECK(brute_chromatic(g).chi == brute_chromatic(h).chi);

            std::set<VertexSubset> mapped;
            for (const auto& s : brute_mis(g).sets) mapped.insert(map.map_set(s));
            std::set<VertexSubset> direct;
            for (const auto& s : brute_mis(h).sets) direct.insert(s);
            CHECK(mapped == direct);
        }
    }
}
