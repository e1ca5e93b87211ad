#include "doctest.h"

#include "boxcx/covering.hpp"
#include "boxcx/random.hpp"
#include "oracles.hpp"

using namespace boxcx;

namespace {

VertexMap antipodal(int n) {
    VertexMap t(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) t[v] = (v + n / 2) % n;
    return t;
}

VertexMap identity(int n) {
    VertexMap t(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) t[v] = v;
    return t;
}

}  // namespace

TEST_CASE("kronecker cover") {
    auto k = kronecker_cover(complete_graph(3));
    CHECK(oracle::graph_iso(k.cover.graph, cycle_graph(6)));
    CHECK(k.cover.graph.label(0) == "(1,1)");
    CHECK(k.cover.coloring == std::vector<int>{1, 1, 1, 2, 2, 2});
    CHECK(k.involution == std::vector<int>{3, 4, 5, 0, 1, 2});
    CHECK(k.projection == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(graph_isomorphic(kronecker_cover(cycle_graph(4)).cover.graph, disjoint_union(cycle_graph(4), cycle_graph(4))));
    CHECK(graph_isomorphic(kronecker_cover(petersen()).cover.graph, desargues()));
    CHECK(is_covering_map(k.cover.graph, complete_graph(3), k.projection));
}

TEST_CASE("odd involutions, colored sense") {
    auto k = kronecker_cover(cycle_graph(5));
    CHECK(is_odd_involution_colored(k.cover, k.involution));
    CHECK_FALSE(is_odd_involution_colored(k.cover, identity(10)));
    ColoredGraph c6{cycle_graph(6), {1, 2, 1, 2, 1, 2}};
    CHECK(is_odd_involution_colored(c6, antipodal(6)));
    CHECK_THROWS_AS(is_odd_involution_colored(c6, std::vector<int>{1, 2, 3, 4, 5, 0}), std::invalid_argument);
}

TEST_CASE("odd involutions, bipartite sense") {
    CHECK(is_odd_involution_bipartite(cycle_graph(6), antipodal(6)));
    // Rotation by two keeps each vertex in its own class.
    CHECK_FALSE(is_odd_involution_bipartite(cycle_graph(4), std::vector<int>{2, 3, 0, 1}));
    // Swapping two components: no path at all joins x to its image.
    Graph two = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(is_odd_involution_bipartite(two, std::vector<int>{2, 3, 0, 1}));
    CHECK_FALSE(is_odd_involution_bipartite(two, std::vector<int>{0, 1, 2, 3}));
    CHECK_THROWS_AS(is_odd_involution_bipartite(cycle_graph(5), identity(5)), std::invalid_argument);

    Rng rng(21);
    for (int i = 0; i < 30; ++i) {
        Graph x = random_bipartite(rng, 2, 8, 45, false);
        for (const auto& t : enumerate_odd_involutions(x)) {
            CHECK_FALSE(oracle::has_even_walk_to_image(x, t));
            auto col = coloring_for_odd_involution(x, t);
            CHECK(is_odd_involution_colored({x, col}, t));
            for (int v = 0; v < x.order(); ++v) CHECK(t[v] != v);
        }
    }
}

TEST_CASE("odd involution enumeration") {
    CHECK(enumerate_odd_involutions(complete_graph(2)) == std::vector<VertexMap>{{1, 0}});
    auto c6 = enumerate_odd_involutions(cycle_graph(6));
    CHECK(std::find(c6.begin(), c6.end(), antipodal(6)) != c6.end());
    CHECK(std::is_sorted(c6.begin(), c6.end()));

    Graph c44 = disjoint_union(cycle_graph(4), cycle_graph(4));
    auto all = enumerate_odd_involutions(c44);
    bool within = false, across = false;
    for (const auto& t : all) {
        if (t[0] < 4) within = true;
        else across = true;
    }
    CHECK(within);
    CHECK(across);
    CHECK(std::find(all.begin(), all.end(), VertexMap{2, 3, 0, 1, 6, 7, 4, 5}) == all.end());

    // Exhaustive oracle: every involutive automorphism without even walks to
    // its image.
    Rng rng(22);
    for (int i = 0; i < 15; ++i) {
        Graph x = random_bipartite(rng, 2, 7, 50, false);
        std::vector<VertexMap> expected;
        std::vector<int> p(static_cast<std::size_t>(x.order()));
        std::iota(p.begin(), p.end(), 0);
        do {
            bool inv = true;
            for (int v = 0; v < x.order(); ++v)
                if (p[p[v]] != v) inv = false;
            if (inv && is_homomorphism(x, x, p) && !oracle::has_even_walk_to_image(x, p)) expected.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(enumerate_odd_involutions(x) == expected);
    }
    CHECK_THROWS_AS(enumerate_odd_involutions(cycle_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_odd_involutions(cycle_graph(26)), std::invalid_argument);
}

TEST_CASE("quotients") {
    CHECK(oracle::graph_iso(quotient(cycle_graph(6), antipodal(6)), complete_graph(3)));
    Graph p = petersen();
    CHECK(oracle::graph_iso(quotient(disjoint_union(p, p), [] {
        VertexMap t(20);
        for (int v = 0; v < 20; ++v) t[v] = (v + 10) % 20;
        return t;
    }()), p));
    auto k = kronecker_cover(p);
    auto w = graph_isomorphic(k.cover.graph, desargues());
    REQUIRE(w);
    VertexMap t(20);
    for (int v = 0; v < 20; ++v) t[(*w)[v]] = (*w)[k.involution[v]];
    CHECK(graph_isomorphic(quotient(desargues(), t), p));

    std::vector<int> orbit;
    Graph q = quotient(cycle_graph(6), antipodal(6), &orbit);
    CHECK(orbit == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(q.labels() == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("covering maps") {
    Graph k2 = complete_graph(2);
    CHECK(is_covering_map(petersen(), petersen(), [] {
        VertexMap id(10);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }()));
    CHECK(is_covering_map(disjoint_union(k2, k2), k2, std::vector<int>{0, 1, 0, 1}));
    CHECK_FALSE(is_covering_map(path_graph(3), looped_vertex(), std::vector<int>{0, 0, 0}));
    CHECK_THROWS_AS(is_covering_map(k2, k2, std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("double cover round trips") {
    Rng rng(23);
    RandomGraphSpec spec{1, 8, 45, 15, true};
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, spec);
        auto k = kronecker_cover(g);
        CHECK(oracle::graph_iso(quotient(k.cover.graph, k.involution), g));
        CHECK(two_coloring(k.cover.graph));
        CHECK(is_covering_map(k.cover.graph, g, k.projection));
    }
    for (int i = 0; i < 25; ++i) {
        Graph x = random_bipartite(rng, 2, 10, 40, true);
        for (const auto& t : enumerate_odd_involutions(x)) {
            Graph q = quotient(x, t);
            CHECK(graph_isomorphic(kronecker_cover(q).cover.graph, x));
        }
    }
}

TEST_CASE("quotient loops appear exactly for orbits containing an edge") {
    Rng rng(24);
    RandomGraphSpec spec{1, 6, 45, 25, true};
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, spec);
        auto k = kronecker_cover(g);
        Graph q = quotient(k.cover.graph, k.involution);
        bool orbit_edge = false;
        for (int v = 0; v < k.cover.graph.order(); ++v)
            if (k.cover.graph.has_edge(v, k.involution[v])) orbit_edge = true;
        CHECK(q.has_any_loop() == orbit_edge);
        CHECK(orbit_edge == g.has_any_loop());
    }
}

TEST_CASE("voltage double covers over non-bipartite graphs") {
    // A connected bipartite double cover of a connected non-bipartite graph is
    // the Kronecker cover.
    Rng rng(25);
    RandomGraphSpec spec{3, 7, 50, 0, true};
    int found = 0;
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, spec);
        if (!is_connected(g) || is_bipartite(g)) continue;
        // Voltages cohomologous to the constant 1 give bipartite covers; the
        // other half are unconstrained.
        std::vector<int> potential(static_cast<std::size_t>(g.order()));
        for (auto& c : potential) c = rng.chance(50) ? 1 : 0;
        const bool structured = i % 2 == 0;
        std::vector<int> voltage;
        for (auto [u, v] : g.edges())
            voltage.push_back(structured ? (1 + potential[u] + potential[v]) % 2 : (rng.chance(50) ? 1 : 0));
        auto d = voltage_double_cover(g, voltage);
        CHECK(is_covering_map(d.graph, g, d.projection));
        if (!is_bipartite(d.graph)) continue;
        ++found;
        Graph cover = kronecker_cover(g).cover.graph;
        auto w = graph_isomorphic(d.graph, cover);
        REQUIRE(w);
        for (auto [u, v] : d.graph.edges()) CHECK(oracle::adjacent(cover, (*w)[u], (*w)[v]));
        CHECK(d.graph.edge_count() == cover.edge_count());
    }
    CHECK(found > 0);
}
