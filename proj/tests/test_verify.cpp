#include "doctest.h"

#include "boxcx/covering.hpp"
#include "boxcx/verify.hpp"
#include "oracles.hpp"

using namespace boxcx;

TEST_CASE("four-copy construction") {
    auto ex = example_413(4, 3);
    CHECK(ex.z.graph.order() == 24);
    CHECK(ex.g.order() == 12);
    CHECK(is_odd_involution_colored(ex.z, ex.tau1));
    CHECK(is_odd_involution_colored(ex.z, ex.tau2));
    CHECK(oracle::chromatic(ex.g) == 4);
    CHECK(oracle::chromatic(ex.h) == 3);
    CHECK(graph_isomorphic(ex.g, clique_gluing(4, 3)));
    CHECK(graph_isomorphic(ex.h, clique_gluing(3, 4)));

    auto sym = example_413(3, 3);
    CHECK(is_connected(sym.z.graph));
    CHECK(is_bipartite(sym.z.graph));
    CHECK(oracle::graph_iso(sym.g, sym.h));

    for (int n = 3; n <= 5; ++n)
        for (int m = 3; m <= 5; ++m) {
            auto e = example_413(n, m);
            CHECK(e.z.graph.order() == 4 * n + 4 * m - 4);
            CHECK(chromatic_number(e.g) == n);
            CHECK(chromatic_number(e.h) == m);
        }
    CHECK_THROWS_AS(example_413(2, 3), std::invalid_argument);
}

TEST_CASE("figure graphs") {
    auto [a, b] = figure2_graphs();
    CHECK(a.order() == 5);
    CHECK(a.edge_count() == 4);
    CHECK(b.order() == 5);
    CHECK(b.edge_count() == 6);
    std::vector<int> da, db;
    for (int v = 0; v < 5; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == std::vector<int>{1, 1, 1, 1, 4});
    CHECK(db == std::vector<int>{2, 2, 2, 3, 3});
    CHECK(is_bipartite(a));
    CHECK(is_bipartite(b));
    CHECK_FALSE(is_stiff(a));
    CHECK_FALSE(is_stiff(b));
}

TEST_CASE("proposition reports") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 3}, {3, 3}, {5, 3}}) {
        auto r = verify_prop_1_2(n, m);
        CHECK(r.verdict());
        CHECK(r.checks.size() == 9);
    }
    auto r = verify_prop_1_2(4, 3);
    REQUIRE(r.find("box_z2_not_isomorphic"));
    CHECK(r.find("box_z2_not_isomorphic")->status == "pass");
    CHECK(r.to_json()["verdict"] == "pass");
    CHECK_FALSE(r.notes.empty());
    CHECK_FALSE(verify_prop_1_2(6, 3).verdict());
}

TEST_CASE("theorem reports") {
    auto same = verify_theorem_1_1(petersen(), petersen());
    CHECK(same.verdict());
    CHECK(same.find("clause2")->detail["graphs_isomorphic"] == true);
    CHECK(same.find("clause3_converse")->status == "pass");

    auto ex = example_413(4, 3);
    auto r = verify_theorem_1_1(ex.g, ex.h);
    CHECK(r.verdict());
    CHECK(r.find("clause1")->detail["covers_isomorphic"] == true);
    CHECK(r.find("clause1")->detail["box_posets_isomorphic"] == true);
    CHECK(r.find("clause2")->detail["graphs_isomorphic"] == false);
    CHECK(r.find("clause2")->detail["box_z2_isomorphic"] == false);
    CHECK(r.find("clause3_forward")->detail["neighborhoods_isomorphic"] == true);

    auto [a, b] = figure2_graphs();
    auto f = verify_theorem_1_1(a, b);
    CHECK(f.verdict());
    CHECK(f.find("clause3_converse")->status == "hypothesis unmet");

    auto stripped = verify_theorem_1_1(disjoint_union(complete_graph(3), edgeless_graph(1)), complete_graph(3));
    CHECK(stripped.verdict());
    CHECK(stripped.notes.size() == 1);
    CHECK(stripped.find("clause2")->detail["graphs_isomorphic"] == true);
}

TEST_CASE("suites are deterministic") {
    auto s1 = verify_section5(5, 5), s2 = verify_section5(5, 5);
    CHECK(s1.verdict());
    CHECK(s1.to_json() == s2.to_json());
    auto t1 = verify_theorem_1_1_suite(3, 9), t2 = verify_theorem_1_1_suite(3, 9);
    CHECK(t1.verdict());
    CHECK(t1.to_json() == t2.to_json());
}

TEST_CASE("verify_all") {
    auto all = verify_all(2);
    REQUIRE(all.size() == 7);
    for (const auto& r : all) CHECK(r.verdict());
    // Reports built on the four-copy construction record its identifications.
    CHECK_FALSE(all[0].notes.empty());
    CHECK_FALSE(all[3].notes.empty());
    CHECK(all[2].notes.empty());
}
