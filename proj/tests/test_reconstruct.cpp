#include "doctest.h"

#include "boxcx/covering.hpp"
#include "boxcx/iso.hpp"
#include "boxcx/random.hpp"
#include "boxcx/reconstruct.hpp"
#include "boxcx/verify.hpp"
#include "oracles.hpp"

using namespace boxcx;

namespace {

int count_k2_components(const Graph& x) {
    int n = 0;
    for (const auto& c : connected_components(x))
        if (c.size() == 2) ++n;
    return n;
}

int count_degree_at_least_two(const Graph& x) {
    int n = 0;
    for (int v = 0; v < x.order(); ++v)
        if (x.degree(v) >= 2) ++n;
    return n;
}

}  // namespace

TEST_CASE("levels") {
    Poset chain({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(element_level(chain, 0) == 0);
    CHECK(element_level(chain, 2) == 2);
    CHECK_THROWS_AS(element_level(chain, 3), std::out_of_range);

    auto b0 = b0_complex(complete_bipartite(1, 4));
    // {{c}, all leaves} sits on top of a chain adding one leaf at a time.
    int full = b0.poset.maximal_elements().front();
    CHECK(element_level(b0.poset, full) == 3);
}

TEST_CASE("simplex face posets") {
    auto boolean3 = face_poset(SimplicialComplex({"a", "b", "c"}, {{0, 1, 2}}));
    CHECK(is_simplex_face_poset(boolean3) == 2);
    CHECK_FALSE(is_simplex_face_poset(Poset({"a", "b"}, {})));
    CHECK(is_simplex_face_poset(Poset({"a"}, {})) == 0);
    // A 2-chain is not a face poset of a simplex.
    CHECK_FALSE(is_simplex_face_poset(Poset({"a", "b"}, {{0, 1}})));

    Graph x = cycle_graph(6);
    auto b0 = b0_complex(x);
    for (int v = 0; v < x.order(); ++v) {
        SetPair star = b0.coloring[v] == 1 ? SetPair{singleton(v), x.neighbor_mask(v)} : SetPair{x.neighbor_mask(v), singleton(v)};
        int e = b0.find(star);
        REQUIRE(e >= 0);
        auto below = b0.poset.down_set(e).to_vector();
        CHECK(is_simplex_face_poset(b0.poset.induced(below)) == x.degree(v) - 1);
    }
}

TEST_CASE("star elements") {
    CHECK(star_elements(b0_complex(complete_graph(2)).poset).size() == 1);
    CHECK(star_elements(b0_complex(cycle_graph(6)).poset).size() == 6);
    CHECK(star_elements(b0_complex(complete_bipartite(2, 3)).poset).size() == 5);
    // Leaves of a star have no element of their own.
    CHECK(star_elements(b0_complex(complete_bipartite(1, 4)).poset).size() == 1);
    CHECK(star_elements(Poset()).empty());

    Rng rng(51);
    for (int i = 0; i < 30; ++i) {
        Graph x = random_bipartite(rng, 2, 9, 40, true);
        auto stars = star_elements(b0_complex(x).poset);
        CHECK(static_cast<int>(stars.size()) == count_degree_at_least_two(x) + count_k2_components(x));
    }
}

TEST_CASE("bipartite reconstruction") {
    CHECK(oracle::graph_iso(reconstruct_bipartite(b0_complex(cycle_graph(6)).poset), cycle_graph(6)));
    CHECK(oracle::graph_iso(reconstruct_bipartite(b0_complex(complete_graph(2)).poset), complete_graph(2)));
    Graph star = reconstruct_bipartite(b0_complex(complete_bipartite(1, 4)).poset);
    CHECK(oracle::graph_iso(star, complete_bipartite(1, 4)));
    CHECK_FALSE(oracle::graph_iso(star, complete_bipartite(2, 3)));

    Rng rng(52);
    for (int i = 0; i < 50; ++i) {
        Graph x = random_bipartite(rng, 2, 10, 40, true);
        Graph r = reconstruct_bipartite(b0_complex(x).poset);
        auto w = graph_isomorphic(r, x);
        REQUIRE(w);
        for (auto [u, v] : r.edges()) CHECK(oracle::adjacent(x, (*w)[u], (*w)[v]));
        CHECK(r.edge_count() == x.edge_count());
    }
}

TEST_CASE("bipartite reconstruction rejects foreign posets") {
    Poset chain({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(reconstruct_bipartite(chain), ValidationError);
    // B(K3) with a poset shape that B0 of the hexagon also has: accepted.
    CHECK_NOTHROW(reconstruct_bipartite(box_complex(complete_graph(3)).z2.poset));
    // Two atoms below two tops would need a double edge.
    Poset bowtie({"a", "b", "c", "d"}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK_THROWS_AS(reconstruct_bipartite(bowtie), ValidationError);
    CHECK_THROWS_AS(reconstruct_bipartite(Poset({"a", "b"}, {{0, 1}})), ValidationError);
    // a, b < c is B0 of a path with two edges.
    Poset vee({"a", "b", "c"}, {{0, 2}, {1, 2}});
    CHECK(oracle::graph_iso(reconstruct_bipartite(vee), path_graph(3)));
}

TEST_CASE("equivariant reconstruction") {
    CHECK(oracle::graph_iso(reconstruct_graph_z2(box_complex(complete_graph(3)).z2), complete_graph(3)));
    auto p = reconstruct_graph_z2(box_complex(petersen()).z2);
    CHECK(graph_isomorphic(p, petersen()));
    CHECK(oracle::graph_iso(reconstruct_graph_z2(box_complex(looped_vertex()).z2), looped_vertex()));
    CHECK(oracle::graph_iso(reconstruct_graph_z2(box_complex(complete_graph(2)).z2), complete_graph(2)));

    auto ex = example_413(4, 3);
    auto bg = box_complex(ex.g);
    CHECK(graph_isomorphic(reconstruct_graph_z2(bg.z2), ex.g));
    Graph plain = reconstruct_bipartite(bg.z2.poset);
    CHECK(graph_isomorphic(plain, kronecker_cover(ex.h).cover.graph));

    Rng rng(53);
    RandomGraphSpec spec{1, 7, 40, 15, true};
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(rng, spec);
        auto r = reconstruct_graph_z2_detailed(box_complex(g).z2);
        CHECK(oracle::graph_iso(r.graph, g));
        CHECK(is_odd_involution_bipartite(r.cover, r.involution));
    }
}

TEST_CASE("equivariant reconstruction rejects bad involutions") {
    auto b = box_complex(complete_graph(3));
    Z2Poset fixed{b.z2.poset, {}};
    for (int e = 0; e < b.z2.poset.size(); ++e) fixed.involution.push_back(e);
    // The identity is order preserving but cannot come from an odd involution.
    CHECK_THROWS_AS(reconstruct_graph_z2(fixed), ValidationError);
    Z2Poset bad{b.z2.poset, std::vector<int>(static_cast<std::size_t>(b.z2.poset.size()), 0)};
    CHECK_THROWS_AS(reconstruct_graph_z2(bad), ValidationError);
}
