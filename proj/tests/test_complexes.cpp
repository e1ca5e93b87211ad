#include "doctest.h"

#include "boxcx/complexes.hpp"
#include "boxcx/homotopy.hpp"
#include "boxcx/iso.hpp"
#include "boxcx/random.hpp"
#include "oracles.hpp"

using namespace boxcx;

namespace {

using Faces = std::vector<std::vector<int>>;

Poset chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
    return Poset(std::vector<std::string>(static_cast<std::size_t>(n), "x"), rel);
}

Poset antichain(int n) { return Poset(std::vector<std::string>(static_cast<std::size_t>(n), "x"), {}); }

SimplicialComplex simplex(int n) {
    std::vector<int> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return SimplicialComplex(labels, {f});
}

SimplicialComplex random_complex(Rng& rng, int n, int facets, int max_size) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    Faces faces;
    for (int v = 0; v < n; ++v) faces.push_back({v});
    for (int i = 0; i < facets; ++i) {
        auto p = rng.permutation(n);
        p.resize(static_cast<std::size_t>(rng.uniform(1, max_size)));
        std::sort(p.begin(), p.end());
        faces.push_back(p);
    }
    return SimplicialComplex(labels, faces);
}

}  // namespace

TEST_CASE("simplicial complex basics") {
    SimplicialComplex k({"a", "b", "c"}, {{0, 1}, {1, 0}, {0}, {2}, {1, 2}});
    CHECK(k.facets() == Faces{{0, 1}, {1, 2}});
    CHECK(k.dimension() == 1);
    CHECK(k.contains(std::vector<int>{1}));
    CHECK_FALSE(k.contains(std::vector<int>{0, 2}));
    CHECK(k.f_vector() == std::vector<std::size_t>{3, 2});
    CHECK(k.faces(0) == Faces{{0}, {1}, {2}});
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0}}), std::invalid_argument);
    CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("poset basics") {
    Poset p({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    CHECK(p.leq(0, 2));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(p.hasse() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(p.minimal_elements() == std::vector<int>{0});
    CHECK(p.maximal_elements() == std::vector<int>{2, 3});
    CHECK(p.levels() == std::vector<int>{0, 1, 2, 1});
    CHECK_THROWS_AS(Poset({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("neighborhood complexes") {
    CHECK(neighborhood_complex(complete_graph(3)).facets() == Faces{{0, 1}, {0, 2}, {1, 2}});
    auto k2 = neighborhood_complex(complete_graph(2));
    CHECK(k2.facets() == Faces{{0}, {1}});
    auto c5 = neighborhood_complex(cycle_graph(5));
    CHECK(c5.facets().size() == 5);
    for (const auto& f : c5.facets()) CHECK(f.size() == 2);
    CHECK(oracle::betti(c5) == std::vector<int>{1, 1});

    Graph g = disjoint_union(complete_graph(2), edgeless_graph(1));
    CHECK(neighborhood_complex(g).vertex_count() == 2);
    CHECK(neighborhood_complex(looped_vertex()).facets() == Faces{{0}});
}

TEST_CASE("colored neighborhood complexes") {
    auto k = kronecker_cover(complete_graph(3));
    CHECK(complex_isomorphic(colored_neighborhood_complex(k.cover, 1), neighborhood_complex(complete_graph(3))));
    auto k5 = kronecker_cover(cycle_graph(5));
    CHECK(complex_isomorphic(colored_neighborhood_complex(k5.cover, 2), neighborhood_complex(cycle_graph(5))));

    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        Graph x = random_bipartite(rng, 2, 8, 45, false);
        ColoredGraph c{x, *two_coloring(x)};
        auto n1 = oracle::all_faces(colored_neighborhood_complex(c, 1));
        auto n2 = oracle::all_faces(colored_neighborhood_complex(c, 2));
        auto n = neighborhood_complex(x);
        // Face sets in graph-vertex terms.
        auto lift = [](const SimplicialComplex& sub, const std::set<std::vector<int>>& faces) {
            std::set<std::vector<std::string>> out;
            for (const auto& f : faces) {
                std::vector<std::string> l;
                for (int v : f) l.push_back(sub.labels()[static_cast<std::size_t>(v)]);
                std::sort(l.begin(), l.end());
                out.insert(l);
            }
            return out;
        };
        auto all = lift(n, oracle::all_faces(n));
        auto u1 = lift(colored_neighborhood_complex(c, 1), n1);
        auto u2 = lift(colored_neighborhood_complex(c, 2), n2);
        std::set<std::vector<std::string>> both = u1;
        both.insert(u2.begin(), u2.end());
        CHECK(both == all);
    }
}

TEST_CASE("box complexes") {
    auto b2 = box_complex(complete_graph(2));
    CHECK(b2.pairs.size() == 2);
    CHECK(b2.z2.poset.hasse().empty());
    CHECK(b2.z2.involution == std::vector<int>{1, 0});
    CHECK(b2.z2.poset.label(0) == "({1},{2})");

    CHECK(box_complex(complete_graph(3)).pairs.size() == 12);
    CHECK(box_complex(edgeless_graph(3)).pairs.empty());
    auto loop = box_complex(looped_vertex());
    CHECK(loop.pairs.size() == 1);
    CHECK(loop.z2.involution == std::vector<int>{0});

    for (int n = 1; n <= 5; ++n) CHECK(box_complex(complete_graph(n)).pairs.size() == oracle::box_pairs(complete_graph(n)).size());

    Rng rng(32);
    RandomGraphSpec spec{1, 6, 45, 20, false};
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, spec);
        auto b = box_complex(g);
        auto expected = oracle::box_pairs(g);
        std::set<std::pair<std::uint64_t, std::uint64_t>> got;
        for (auto p : b.pairs) got.insert({p.first, p.second});
        CHECK(got == expected);
        for (int a = 0; a < b.z2.poset.size(); ++a) {
            CHECK(b.find(b.pairs[a]) == a);
            auto sw = b.pairs[b.z2.involution[a]];
            CHECK(sw.first == b.pairs[a].second);
            CHECK(sw.second == b.pairs[a].first);
            if (!g.has_any_loop()) CHECK(b.z2.involution[a] != a);
            for (int c = 0; c < b.z2.poset.size(); ++c) {
                bool incl = is_subset(b.pairs[a].first, b.pairs[c].first) && is_subset(b.pairs[a].second, b.pairs[c].second);
                CHECK(b.z2.poset.leq(a, c) == incl);
            }
        }
    }
}

TEST_CASE("B0 complexes") {
    auto k2 = b0_complex(complete_graph(2));
    CHECK(k2.poset.size() == 1);
    auto c6 = b0_complex(cycle_graph(6));
    CHECK(c6.poset.size() == 12);
    CHECK(poset_isomorphic(c6.poset, box_complex(complete_graph(3)).z2.poset));
    CHECK(b0_complex(edgeless_graph(2)).poset.size() == 0);
    CHECK_THROWS_AS(b0_complex(cycle_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(b0_complex(looped_vertex()), std::invalid_argument);

    // B0 is the one-color-per-side subposet of B.
    Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        Graph x = random_bipartite(rng, 2, 8, 45, false);
        auto b0 = b0_complex(x);
        auto b = box_complex(x);
        std::vector<int> keep;
        for (int e = 0; e < b.z2.poset.size(); ++e) {
            bool ok = true;
            for_each_member(b.pairs[e].first, [&](int v) { ok = ok && b0.coloring[v] == 1; });
            for_each_member(b.pairs[e].second, [&](int v) { ok = ok && b0.coloring[v] == 2; });
            if (ok) keep.push_back(e);
        }
        REQUIRE(keep.size() == static_cast<std::size_t>(b0.poset.size()));
        for (std::size_t a = 0; a < keep.size(); ++a) {
            int ia = b0.find(b.pairs[keep[a]]);
            REQUIRE(ia >= 0);
            for (std::size_t c = 0; c < keep.size(); ++c)
                CHECK(b0.poset.leq(ia, b0.find(b.pairs[keep[c]])) == b.z2.poset.leq(keep[a], keep[c]));
        }
    }
}

TEST_CASE("the correspondence B(G) -> B0(K2 x G)") {
    auto k2 = phi_iso(complete_graph(2));
    CHECK(verify_phi_iso(k2));
    int e = k2.box.find({singleton(0), singleton(1)});
    REQUIRE(e >= 0);
    auto image = k2.b0.pairs[k2.phi[e]];
    CHECK(image.first == singleton(0));   // (1,1)
    CHECK(image.second == singleton(3));  // (2,2)

    auto k3 = phi_iso(complete_graph(3));
    for (int a = 0; a < k3.b0.poset.size(); ++a) CHECK(k3.phi[k3.psi[a]] == a);

    Rng rng(34);
    RandomGraphSpec spec{1, 7, 40, 10, false};
    for (int i = 0; i < 30; ++i) CHECK(verify_phi_iso(phi_iso(random_graph(rng, spec))));
}

TEST_CASE("face posets and order complexes") {
    auto tri = face_poset(simplex(3));
    CHECK(tri.size() == 7);
    SimplicialComplex two({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
    auto fp = face_poset(two);
    CHECK(fp.size() == 6);
    CHECK(oracle::components(order_complex(fp)) == 2);

    auto c4 = order_complex(chain(4));
    CHECK(c4.facets().size() == 1);
    CHECK(c4.dimension() == 3);
    auto a3 = order_complex(antichain(3));
    CHECK(a3.facets() == Faces{{0}, {1}, {2}});

    auto dk3 = order_complex(box_complex(complete_graph(3)).z2.poset);
    CHECK(dk3.vertex_count() == 12);
    CHECK(oracle::betti(dk3) == std::vector<int>{1, 1});

    Rng rng(35);
    for (int i = 0; i < 20; ++i) {
        auto k = random_complex(rng, 6, 4, 4);
        CHECK(oracle::betti(order_complex(face_poset(k))) == oracle::betti(k));  // same dimension
    }
}

TEST_CASE("B' complexes") {
    auto k2 = bprime_complex(complete_graph(2));
    CHECK(k2.complex.facets() == Faces{{0, 3}, {1, 2}});
    CHECK(k2.involution == std::vector<int>{1, 0, 3, 2});
    CHECK(k2.complex.labels()[3] == "(2,1)");

    auto k3 = bprime_complex(complete_graph(3));
    CHECK(k3.complex.facets().size() == 6);
    for (const auto& f : k3.complex.facets()) CHECK(f.size() == 3);
    CHECK(bprime_complex(edgeless_graph(3)).complex.empty());
    CHECK_THROWS_AS(bprime_complex(looped_vertex()), std::invalid_argument);

    // Face sets against direct enumeration of the defining condition.
    Rng rng(36);
    RandomGraphSpec spec{2, 5, 50, 0, true};
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(rng, spec);
        auto b = bprime_complex(g);
        const int n = g.order();
        std::set<std::vector<int>> expected;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
            for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
                if (s == 0 && t == 0) continue;
                auto in_nbhd = [&](std::uint64_t m) {
                    if (m == 0) return true;
                    for (int v = 0; v < n; ++v) {
                        bool all = true;
                        for (int u = 0; u < n; ++u)
                            if (((m >> u) & 1) && !oracle::adjacent(g, v, u)) all = false;
                        if (all) return true;
                    }
                    return false;
                };
                bool cross = true;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (((s >> u) & 1) && ((t >> v) & 1) && !oracle::adjacent(g, u, v)) cross = false;
                if (!cross || !in_nbhd(s) || !in_nbhd(t)) continue;
                std::vector<int> face;
                for (int v = 0; v < n; ++v) {
                    if ((s >> v) & 1) face.push_back(2 * v);
                    if ((t >> v) & 1) face.push_back(2 * v + 1);
                }
                std::sort(face.begin(), face.end());
                expected.insert(face);
            }
        CHECK(oracle::all_faces(b.complex) == expected);
    }
}

TEST_CASE("B'0 complexes") {
    ColoredGraph k2{complete_graph(2), {1, 2}};
    CHECK(bprime0_complex(k2).facets() == Faces{{0, 1}});
    auto a = complete_bipartite(1, 4), b = complete_bipartite(2, 3);
    auto ka = bprime0_complex({a, *two_coloring(a)});
    auto kb = bprime0_complex({b, *two_coloring(b)});
    auto w = complex_isomorphic(ka, kb);
    REQUIRE(w);
    CHECK(oracle::complex_iso(ka, kb, *w));

    Rng rng(37);
    RandomGraphSpec spec{2, 6, 45, 0, true};
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(rng, spec);
        auto k = kronecker_cover(g);
        auto lhs = bprime0_z2(k.cover, k.involution);
        auto rhs = bprime_complex(g);
        auto iso = z2_complex_isomorphic(lhs, rhs);
        REQUIRE(iso);
        CHECK(oracle::complex_iso(lhs.complex, rhs.complex, *iso));
        for (int v = 0; v < lhs.complex.vertex_count(); ++v) CHECK((*iso)[lhs.involution[v]] == rhs.involution[(*iso)[v]]);

        ColoredGraph flipped = k.cover;
        for (auto& c : flipped.coloring) c = 3 - c;
        CHECK(bprime0_complex(flipped) == bprime0_complex(k.cover));
    }
}
