#include "doctest.h"

#include "boxcx/homotopy.hpp"
#include "boxcx/iso.hpp"
#include "boxcx/random.hpp"
#include "boxcx/verify.hpp"
#include "oracles.hpp"

using namespace boxcx;

TEST_CASE("GF(2) Betti numbers") {
    CHECK(betti_gf2(SimplicialComplex({"p"}, {{0}})) == BettiVector{1});
    CHECK(betti_gf2(SimplicialComplex()).empty());
    CHECK(betti_gf2(order_complex(box_complex(complete_graph(3)).z2.poset)) == BettiVector{1, 1});
    CHECK(betti_gf2(neighborhood_complex(complete_graph(4))) == BettiVector{1, 0, 1});
    // Projective plane: six-vertex triangulation, b2 = 1 over GF(2).
    SimplicialComplex rp2({"1", "2", "3", "4", "5", "6"},
                          {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    CHECK(betti_gf2(rp2) == BettiVector{1, 1, 1});

    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::string> labels;
        const int n = rng.uniform(1, 8);
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
        std::vector<std::vector<int>> faces;
        for (int v = 0; v < n; ++v) faces.push_back({v});
        for (int f = 0; f < 6; ++f) {
            auto p = rng.permutation(n);
            p.resize(static_cast<std::size_t>(rng.uniform(1, std::min(n, 5))));
            std::sort(p.begin(), p.end());
            faces.push_back(p);
        }
        SimplicialComplex k(labels, faces);
        CHECK(betti_gf2(k) == oracle::betti(k));
        CHECK(complex_connected(k) == oracle::components(k));
        CHECK(betti_gf2(k)[0] == complex_connected(k));
    }
}

TEST_CASE("connectivity of neighborhood complexes") {
    CHECK(complex_connected(neighborhood_complex(cycle_graph(6))) == 2);
    CHECK(complex_connected(neighborhood_complex(cycle_graph(5))) == 1);
    CHECK(complex_connected(order_complex(box_complex(complete_graph(2)).z2.poset)) == 2);
}

TEST_CASE("box complex and neighborhood complex have equal Betti numbers") {
    Rng rng(62);
    RandomGraphSpec spec{1, 6, 40, 10, true};
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(rng, spec);
        CHECK(oracle::trimmed(betti_gf2(order_complex(box_complex(g).z2.poset))) ==
              oracle::trimmed(betti_gf2(neighborhood_complex(g))));
    }
}

TEST_CASE("B0 and the colored neighborhood complexes have equal Betti numbers") {
    Rng rng(63);
    for (int i = 0; i < 20; ++i) {
        Graph x = random_bipartite(rng, 2, 8, 45, true);
        ColoredGraph c{x, *two_coloring(x)};
        auto b = oracle::trimmed(betti_gf2(order_complex(b0_complex(c).poset)));
        CHECK(b == oracle::trimmed(betti_gf2(colored_neighborhood_complex(c, 1))));
        CHECK(b == oracle::trimmed(betti_gf2(colored_neighborhood_complex(c, 2))));
    }
}

TEST_CASE("colored neighborhood complexes of a Kronecker cover") {
    Rng rng(64);
    RandomGraphSpec spec{1, 7, 45, 10, true};
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(rng, spec);
        auto k = kronecker_cover(g);
        auto n1 = colored_neighborhood_complex(k.cover, 1), n2 = colored_neighborhood_complex(k.cover, 2);
        auto n = neighborhood_complex(g);
        CHECK(complex_isomorphic(n1, n2));
        auto w = complex_isomorphic(n1, n);
        REQUIRE(w);
        CHECK(oracle::complex_iso(n1, n, *w));
    }
}

TEST_CASE("isomorphic covers give isomorphic neighborhood complexes") {
    auto ex = example_413(4, 3);
    CHECK(complex_isomorphic(neighborhood_complex(ex.g), neighborhood_complex(ex.h)));
    Rng rng(65);
    for (int i = 0; i < 15; ++i) {
        Graph x = random_bipartite(rng, 2, 10, 40, true);
        auto taus = enumerate_odd_involutions(x);
        if (taus.size() < 2) continue;
        Graph g = quotient(x, taus.front()), h = quotient(x, taus.back());
        CHECK(complex_isomorphic(neighborhood_complex(g), neighborhood_complex(h)));
    }
}

TEST_CASE("homomorphism enumeration") {
    CHECK(enumerate_homomorphisms(complete_graph(2), complete_graph(3)).size() == 6);
    CHECK(enumerate_homomorphisms(complete_graph(3), complete_graph(2)).empty());
    CHECK(enumerate_homomorphisms(edgeless_graph(3), cycle_graph(4)).size() == 64);
    CHECK_THROWS_AS(enumerate_homomorphisms(edgeless_graph(13), complete_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_homomorphisms(edgeless_graph(12), complete_graph(12), {12, 1000, 10}), std::length_error);

    Rng rng(66);
    RandomGraphSpec spec{1, 5, 45, 15, false};
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, spec), h = random_graph(rng, spec);
        CHECK(enumerate_homomorphisms(g, h) == oracle::homs(g, h));
    }
}

TEST_CASE("x-homotopy") {
    Graph k2 = complete_graph(2);
    Graph p3 = path_graph(3);
    std::vector<int> f{0, 1}, g{2, 1};
    CHECK(x_homotopic(k2, p3, f, f));
    CHECK(one_step_homotopic(k2, p3, f, g));
    CHECK(x_homotopic(k2, p3, f, g));

    auto maps = enumerate_homomorphisms(k2, complete_graph(3));
    for (const auto& a : maps)
        for (const auto& b : maps) CHECK(x_homotopic(k2, complete_graph(3), a, b));

    // K3 -> K3: distinct automorphisms are not homotopic (K3 is stiff).
    Graph k3 = complete_graph(3);
    CHECK_FALSE(x_homotopic(k3, k3, std::vector<int>{0, 1, 2}, std::vector<int>{1, 0, 2}));
    CHECK_THROWS_AS(x_homotopic(k2, k3, std::vector<int>{0, 0}, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("x-homotopy is an equivalence relation") {
    Rng rng(67);
    RandomGraphSpec spec{2, 4, 50, 20, true};
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(rng, spec), h = random_graph(rng, spec);
        auto maps = enumerate_homomorphisms(g, h);
        if (maps.size() > 12) maps.resize(12);
        for (std::size_t a = 0; a < maps.size(); ++a)
            for (std::size_t b = 0; b < maps.size(); ++b) {
                bool ab = x_homotopic(g, h, maps[a], maps[b]);
                CHECK(ab == x_homotopic(g, h, maps[b], maps[a]));
                if (!ab) continue;
                for (std::size_t c = 0; c < maps.size(); ++c)
                    if (x_homotopic(g, h, maps[b], maps[c])) CHECK(x_homotopic(g, h, maps[a], maps[c]));
            }
    }
}

TEST_CASE("x-homotopy equivalence") {
    Graph p = petersen();
    auto same = x_homotopy_equivalent(p, relabel(p, std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0}));
    CHECK(same);
    CHECK_FALSE(x_homotopy_equivalent(complete_graph(3), complete_graph(2)));
    // A path folds onto an edge.
    auto fold = x_homotopy_equivalent(path_graph(3), complete_graph(2));
    REQUIRE(fold);
    CHECK(is_homomorphism(path_graph(3), complete_graph(2), fold->first));
    CHECK(is_homomorphism(complete_graph(2), path_graph(3), fold->second));

    auto ex = example_413(3, 3);
    auto kg = kronecker_cover(ex.g).cover.graph, kh = kronecker_cover(ex.h).cover.graph;
    CHECK(x_homotopy_equivalent(kg, kh, {32, 2'000'000, 200'000}));
}

TEST_CASE("cover homotopy witness") {
    Graph k3 = complete_graph(3);
    auto w = prop410_witness(std::vector<int>{0, 1, 2}, k3, k3);
    CHECK(w.certified());
    CHECK(w.f_map == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(w.f_back == std::vector<int>{0, 1, 2, 3, 4, 5});

    // N(K_{1,4}) and N(K_{2,3}) are not isomorphic, so no bijection qualifies.
    auto [a, b] = figure2_graphs();
    CHECK_FALSE(complex_isomorphic(neighborhood_complex(a), neighborhood_complex(b)));
    CHECK_THROWS_AS(prop410_witness(std::vector<int>{0, 1, 2, 3, 4}, a, b), std::invalid_argument);
    CHECK_THROWS_AS(prop410_witness(std::vector<int>{0, 1, 2}, disjoint_union(complete_graph(2), edgeless_graph(1)), k3),
                    std::invalid_argument);

    auto ex = example_413(4, 3);
    auto iso = complex_isomorphic(neighborhood_complex(ex.g), neighborhood_complex(ex.h));
    REQUIRE(iso);
    auto cert = prop410_witness(*iso, ex.g, ex.h);
    CHECK(cert.certified());
    auto kg = kronecker_cover(ex.g), kh = kronecker_cover(ex.h);
    CHECK(is_homomorphism(kg.cover.graph, kh.cover.graph, cert.f_map));
    CHECK(is_homomorphism(kh.cover.graph, kg.cover.graph, cert.f_back));

    Rng rng(68);
    RandomGraphSpec spec{3, 8, 50, 0, true};
    int stiff = 0;
    for (int i = 0; i < 40 && stiff < 10; ++i) {
        Graph g = random_graph(rng, spec);
        if (!is_stiff(g)) continue;
        ++stiff;
        auto perm = rng.permutation(g.order());
        Graph h = relabel(g, perm);
        auto ni = complex_isomorphic(neighborhood_complex(g), neighborhood_complex(h));
        REQUIRE(ni);
        // The complex map is indexed by non-isolated vertices; g has none.
        auto c = prop410_witness(*ni, g, h);
        CHECK(c.certified());
        CHECK(is_graph_isomorphism(kronecker_cover(g).cover.graph, kronecker_cover(h).cover.graph, c.f_map));
    }
    CHECK(stiff > 0);
}
