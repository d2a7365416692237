#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "sbe/mis.hpp"
#include "sbe/oracle.hpp"

using namespace sbe;

namespace {

std::set<VertexSubset> as_set(const std::vector<VertexSubset>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("find_mis on path(5)") {
    MisResult r = find_mis(path_graph(5));
    REQUIRE(r.mis_sets.size() == 1);
    CHECK(r.mis_sets[0] == VertexSubset::of(5, {1, 3, 5}));
    CHECK(r.stats.alpha == 3);
    CHECK(r.stats.mis_depth == 2); // layer number floor(5/2)+1, 1-indexed
    CHECK(r.stats.layer_widths == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(r.stats.delta == 3);
}

TEST_CASE("find_mis on an edgeless graph stops at the root") {
    Graph g = gnm_graph(6, 0, 0);
    MisResult r = find_mis(g);
    REQUIRE(r.mis_sets.size() == 1);
    CHECK(r.mis_sets[0] == g.vertex_set());
    CHECK(r.stats.alpha == 6);
    CHECK(r.stats.delta == 0);
    CHECK(r.stats.mis_depth == 0);
}

TEST_CASE("find_mis on complete(3): 1 split at layer 0, 2 at layer 1") {
    MisResult r = find_mis(complete_graph(3));
    CHECK(as_set(r.mis_sets) == std::set<VertexSubset>{VertexSubset::of(3, {1}),
                                                       VertexSubset::of(3, {2}),
                                                       VertexSubset::of(3, {3})});
    CHECK(r.stats.alpha == 1);
    CHECK(r.stats.delta == 3);
    CHECK(r.stats.mis_depth == 2);
}

TEST_CASE("find_mis agrees with the oracle and returns every maximum set") {
    for (int i = 0; i < 40; ++i) {
        Graph g = fixtures::seeded_gnm(0x111, i, 1, 12);
        auto expected = brute_mis(g);
        MisResult r = find_mis(g);
        CHECK(r.stats.alpha == expected.alpha);
        CHECK(as_set(r.mis_sets) == as_set(expected.sets));
        CHECK(r.stats.alpha == g.vertex_count() - r.stats.mis_depth);
    }
}

TEST_CASE("alpha is invariant under orderings; sets map back correctly") {
    for (int i = 0; i < 15; ++i) {
        Graph g = fixtures::seeded_gnm(0x222, i, 1, 12);
        MisResult plain = find_mis(g);
        for (Ordering o : {Ordering::none, Ordering::descending, Ordering::ascending}) {
            MisResult r = find_mis_with_ordering(g, o);
            CHECK(r.stats.alpha == plain.stats.alpha);
            CHECK(as_set(r.mis_sets) == as_set(plain.mis_sets));
            for (const auto& s : r.mis_sets) {
                CHECK(is_independent(g, s));
                CHECK(s.size() == r.stats.alpha);
            }
        }
    }
}

TEST_CASE("delta equals the sum of per-layer splits") {
    for (int i = 0; i < 10; ++i) {
        Graph g = fixtures::seeded_gnm(0x333, i, 2, 12);
        MisResult r = find_mis(g);

        // replay with expand_layer and count
        Layer layer(0);
        layer.insert(g.vertex_set());
        std::uint64_t splits = 0;
        while (true) {
            bool has_leaf = false;
            for (const auto& node : layer.nodes())
                if (!splitting_edge(g, node)) has_leaf = true;
            if (has_leaf) break;
            auto ex = expand_layer(g, layer);
            splits += ex.splits;
            layer = std::move(ex.next);
        }
        CHECK(r.stats.delta == splits);
    }
}

TEST_CASE("find_mis budget error carries partial stats") {
    try {
        find_mis(moebius_ladder(20), 30);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.nodes_built() == 31);
        CHECK(e.splits_done() > 0);
        CHECK_FALSE(e.layer_widths().empty());
    }
}

TEST_CASE("ordering strings") {
    CHECK(ordering_from_string("none") == Ordering::none);
    CHECK(ordering_from_string("descending") == Ordering::descending);
    CHECK(ordering_from_string("ascending") == Ordering::ascending);
    CHECK_THROWS_AS(ordering_from_string("sideways"), argument_error);
}
