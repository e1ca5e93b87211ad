#include "boxcx/verify.hpp"

#include <numeric>
#include <stdexcept>

#include "boxcx/complexes.hpp"
#include "boxcx/homotopy.hpp"
#include "boxcx/iso.hpp"
#include "boxcx/random.hpp"

namespace boxcx {

SubCheck& VerificationReport::add(std::string name, bool ok, json detail) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
    return checks.back();
}

SubCheck& VerificationReport::unmet(std::string name, json detail) {
    checks.push_back({std::move(name), "hypothesis unmet", std::move(detail)});
    return checks.back();
}

bool VerificationReport::verdict() const {
    return std::none_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.status == "fail"; });
}

const SubCheck* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

json VerificationReport::to_json() const {
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return {{"claim", claim}, {"inputs", inputs}, {"checks", cs}, {"notes", notes}, {"verdict", verdict() ? "pass" : "fail"}};
}

namespace {

// Vertex (eps, x) of K2 × K_k inside copy `copy`, with eps in {1,2}, x in 1..k.
struct CopyLayout {
    int n, m;
    int size(int copy) const { return copy < 2 ? 2 * n : 2 * m; }
    int offset(int copy) const { return copy == 0 ? 0 : copy == 1 ? 2 * n : copy == 2 ? 4 * n : 4 * n + 2 * m; }
    int k(int copy) const { return copy < 2 ? n : m; }
    int raw(int copy, int eps, int x) const { return offset(copy) + (eps - 1) * k(copy) + (x - 1); }
    int total() const { return 4 * n + 4 * m; }
};

const char* kCopyName[4] = {"X1", "X2", "Y1", "Y2"};

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

json optional_witness(const std::optional<std::vector<int>>& w) { return w ? json(*w) : json(nullptr); }

const char* kRepairNote =
    "four-copy construction uses the identification (2,1) of X2 ~ (2,1) of Y2 and lets tau2 swap X1 and X2";

}  // namespace

Example413 example_413(int n, int m) {
    if (n < 3 || m < 3) throw std::invalid_argument("example_413 needs n, m >= 3");
    CopyLayout L{n, m};
    const int total = L.total();
    std::vector<int> parent(static_cast<std::size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) {
        a = find_root(parent, a);
        b = find_root(parent, b);
        if (a > b) std::swap(a, b);
        parent[b] = a;
    };
    unite(L.raw(0, 1, 1), L.raw(2, 1, 1));
    unite(L.raw(0, 2, 1), L.raw(3, 1, 1));
    unite(L.raw(1, 1, 1), L.raw(2, 2, 1));
    unite(L.raw(1, 2, 1), L.raw(3, 2, 1));

    // Classes numbered by least raw member.
    std::vector<int> cls(static_cast<std::size_t>(total), -1);
    std::vector<std::string> labels;
    std::vector<int> class_of_root(static_cast<std::size_t>(total), -1);
    for (int r = 0; r < total; ++r) {
        int root = find_root(parent, r);
        if (class_of_root[root] < 0) {
            class_of_root[root] = static_cast<int>(labels.size());
            labels.push_back("");
        }
        cls[r] = class_of_root[root];
    }

    std::vector<int> raw_copy(static_cast<std::size_t>(total)), raw_eps(raw_copy), raw_x(raw_copy);
    for (int c = 0; c < 4; ++c)
        for (int eps = 1; eps <= 2; ++eps)
            for (int x = 1; x <= L.k(c); ++x) {
                int r = L.raw(c, eps, x);
                raw_copy[r] = c;
                raw_eps[r] = eps;
                raw_x[r] = x;
                auto& l = labels[static_cast<std::size_t>(cls[r])];
                std::string name = std::string(kCopyName[c]) + "(" + std::to_string(eps) + "," + std::to_string(x) + ")";
                l = l.empty() ? name : l + "=" + name;
            }

    Example413 ex;
    ex.z.graph = Graph(labels);
    for (int c = 0; c < 4; ++c)
        for (int x = 1; x <= L.k(c); ++x)
            for (int y = 1; y <= L.k(c); ++y)
                if (x != y) ex.z.graph.add_edge(cls[L.raw(c, 1, x)], cls[L.raw(c, 2, y)]);

    const int nz = ex.z.graph.order();
    auto lift = [&](auto raw_image) {
        VertexMap t(static_cast<std::size_t>(nz), -1);
        for (int r = 0; r < total; ++r) {
            int image = cls[raw_image(r)];
            int& slot = t[static_cast<std::size_t>(cls[r])];
            if (slot >= 0 && slot != image) throw std::logic_error("identifications are not compatible with the involution");
            slot = image;
        }
        return t;
    };
    ex.tau1 = lift([&](int r) {
        int c = raw_copy[r], eps = raw_eps[r], x = raw_x[r];
        if (c < 2) return L.raw(c, 3 - eps, x);
        return L.raw(c == 2 ? 3 : 2, eps, x);
    });
    ex.tau2 = lift([&](int r) {
        int c = raw_copy[r], eps = raw_eps[r], x = raw_x[r];
        if (c >= 2) return L.raw(c, 3 - eps, x);
        return L.raw(c == 0 ? 1 : 0, eps, x);
    });

    ex.z.coloring.assign(static_cast<std::size_t>(nz), 0);
    for (int r = 0; r < total; ++r) {
        int c = raw_copy[r];
        int color = (c == 0 || c == 2) ? raw_eps[r] : 3 - raw_eps[r];
        int& slot = ex.z.coloring[static_cast<std::size_t>(cls[r])];
        if (slot != 0 && slot != color) throw std::logic_error("identifications are not compatible with the coloring");
        slot = color;
    }
    validate_colored(ex.z);
    validate_involution(ex.z.graph, ex.tau1);
    validate_involution(ex.z.graph, ex.tau2);
    if (!is_odd_involution_colored(ex.z, ex.tau1) || !is_odd_involution_colored(ex.z, ex.tau2))
        throw std::logic_error("involution is not odd");

    ex.g = quotient(ex.z.graph, ex.tau1);
    ex.h = quotient(ex.z.graph, ex.tau2);
    return ex;
}

Graph clique_gluing(int n, int m) {
    // Cover part first: (eps, x) at (eps-1)*m + x-1; then the other vertices
    // of each clique.
    Graph cover = kronecker_cover(complete_graph(m)).cover.graph;
    std::vector<std::string> labels = cover.labels();
    for (int copy = 1; copy <= 2; ++copy)
        for (int x = 2; x <= n; ++x) labels.push_back("K" + std::to_string(copy) + "(" + std::to_string(x) + ")");
    Graph g(labels);
    for (auto [u, v] : cover.edges()) g.add_edge(u, v);
    const int base = 2 * m;
    for (int copy = 0; copy < 2; ++copy) {
        std::vector<int> clique{copy * m};  // vertex 1 of this clique is (copy+1, 1)
        for (int x = 2; x <= n; ++x) clique.push_back(base + copy * (n - 1) + (x - 2));
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);
    }
    return g;
}

VerificationReport verify_prop_1_2(int n, int m) {
    VerificationReport r;
    r.claim = "prop_1_2";
    r.inputs = {{"n", n}, {"m", m}};
    r.notes.push_back(kRepairNote);
    if (n < 3 || m < 3 || n > 5 || m > 5) {
        r.add("parameters", false, {{"error", "n and m must lie in 3..5"}});
        return r;
    }
    Example413 ex = example_413(n, m);
    r.add("construction", true,
          {{"z_vertices", ex.z.graph.order()}, {"g_vertices", ex.g.order()}, {"h_vertices", ex.h.order()},
           {"tau1_odd", true}, {"tau2_odd", true}});

    int chi_g = chromatic_number(ex.g), chi_h = chromatic_number(ex.h);
    r.add("chromatic_g", chi_g == n, {{"value", chromatic_to_json(chi_g)}, {"expected", n}});
    r.add("chromatic_h", chi_h == m, {{"value", chromatic_to_json(chi_h)}, {"expected", m}});
    r.add("connected", is_connected(ex.g) && is_connected(ex.h));

    auto glue_g = graph_isomorphic(ex.g, clique_gluing(n, m));
    auto glue_h = graph_isomorphic(ex.h, clique_gluing(m, n));
    r.add("gluing_description", glue_g && glue_h, {{"g", glue_g.has_value()}, {"h", glue_h.has_value()}});

    auto kg = kronecker_cover(ex.g), kh = kronecker_cover(ex.h);
    auto cover_g = graph_isomorphic(kg.cover.graph, ex.z.graph);
    auto cover_h = graph_isomorphic(kh.cover.graph, ex.z.graph);
    r.add("covers_isomorphic", cover_g && cover_h, {{"g_to_z", optional_witness(cover_g)}, {"h_to_z", optional_witness(cover_h)}});

    BoxComplex bg = box_complex(ex.g), bh = box_complex(ex.h);
    auto b_iso = poset_isomorphic(bg.z2.poset, bh.z2.poset);
    r.add("box_poset_isomorphic", b_iso.has_value(),
          {{"elements", {bg.pairs.size(), bh.pairs.size()}}, {"witness", optional_witness(b_iso)}});

    auto n_iso = complex_isomorphic(neighborhood_complex(ex.g), neighborhood_complex(ex.h));
    r.add("neighborhood_isomorphic", n_iso.has_value(), {{"witness", optional_witness(n_iso)}});

    auto z2 = z2_poset_isomorphic(bg.z2, bh.z2);
    if (n != m) {
        r.add("box_z2_not_isomorphic", !z2.has_value(), {{"search", "exhaustive"}, {"found", z2.has_value()}});
    } else {
        auto gh = graph_isomorphic(ex.g, ex.h);
        r.add("symmetric_case", gh.has_value() && z2.has_value(), {{"graphs_isomorphic", gh.has_value()}, {"z2_isomorphic", z2.has_value()}});
    }
    return r;
}

VerificationReport verify_theorem_1_1(const Graph& g_in, const Graph& h_in) {
    VerificationReport r;
    r.claim = "theorem_1_1";
    r.inputs = {{"g", graph_to_json(g_in)}, {"h", graph_to_json(h_in)}};
    Graph g = strip_isolated(g_in), h = strip_isolated(h_in);
    if (g.order() != g_in.order()) r.notes.push_back("removed isolated vertices from G");
    if (h.order() != h_in.order()) r.notes.push_back("removed isolated vertices from H");

    const bool cover_iso = graph_isomorphic(kronecker_cover(g).cover.graph, kronecker_cover(h).cover.graph).has_value();
    BoxComplex bg = box_complex(g), bh = box_complex(h);
    const bool b_iso = poset_isomorphic(bg.z2.poset, bh.z2.poset).has_value();
    const bool g_iso = graph_isomorphic(g, h).has_value();
    const bool z2_iso = z2_poset_isomorphic(bg.z2, bh.z2).has_value();
    const bool n_iso = complex_isomorphic(neighborhood_complex(g), neighborhood_complex(h)).has_value();
    const bool stiff = is_stiff(g) && is_stiff(h);

    r.add("clause1", cover_iso == b_iso, {{"covers_isomorphic", cover_iso}, {"box_posets_isomorphic", b_iso}});
    r.add("clause2", g_iso == z2_iso, {{"graphs_isomorphic", g_iso}, {"box_z2_isomorphic", z2_iso}});
    r.add("clause3_forward", !cover_iso || n_iso, {{"covers_isomorphic", cover_iso}, {"neighborhoods_isomorphic", n_iso}});
    json converse = {{"covers_isomorphic", cover_iso}, {"neighborhoods_isomorphic", n_iso},
                     {"g_stiff", is_stiff(g)}, {"h_stiff", is_stiff(h)}};
    if (stiff)
        r.add("clause3_converse", !n_iso || cover_iso, converse);
    else
        r.unmet("clause3_converse", converse);
    return r;
}

std::pair<Graph, Graph> figure2_graphs() { return {complete_bipartite(1, 4), complete_bipartite(2, 3)}; }

VerificationReport verify_section5(std::uint64_t seed, int random_graphs) {
    VerificationReport r;
    r.claim = "section_5";
    r.inputs = {{"seed", seed}, {"random_graphs", random_graphs}};
    auto [a, b] = figure2_graphs();
    ColoredGraph ca{a, *two_coloring(a)}, cb{b, *two_coloring(b)};

    auto prime = complex_isomorphic(bprime0_complex(ca), bprime0_complex(cb));
    r.add("bprime0_isomorphic", prime.has_value(), {{"witness", optional_witness(prime)}});
    r.add("graphs_not_isomorphic", !graph_isomorphic(a, b).has_value());
    r.add("b0_not_isomorphic", !poset_isomorphic(b0_complex(ca).poset, b0_complex(cb).poset).has_value());
    r.add("stiffness", true, {{"k14", is_stiff(a)}, {"k23", is_stiff(b)}});

    auto swapped = [](ColoredGraph x) {
        for (auto& c : x.coloring) c = 3 - c;
        return x;
    };
    bool same = bprime0_complex(ca) == bprime0_complex(swapped(ca)) && bprime0_complex(cb) == bprime0_complex(swapped(cb));
    r.add("bprime0_coloring_independent", same);

    auto thm51 = [](const Graph& g) {
        auto k = kronecker_cover(g);
        return z2_complex_isomorphic(bprime0_z2(k.cover, k.involution), bprime_complex(g)).has_value();
    };
    r.add("theorem_5_1_k3", thm51(complete_graph(3)));

    Rng rng(seed);
    RandomGraphSpec spec{2, 6, 55, 0, true};
    json failures = json::array();
    for (int i = 0; i < random_graphs; ++i) {
        Graph g = random_graph(rng, spec);
        if (!thm51(g)) failures.push_back(graph_to_json(g));
    }
    r.add("theorem_5_1_random", failures.empty(), {{"trials", random_graphs}, {"failures", failures}});
    return r;
}

VerificationReport verify_theorem_1_1_suite(std::uint64_t seed, int pairs, int max_vertices) {
    VerificationReport r;
    r.claim = "theorem_1_1_suite";
    r.inputs = {{"seed", seed}, {"pairs", pairs}, {"max_vertices", max_vertices}};
    Rng rng(seed);
    RandomGraphSpec spec{2, max_vertices, 55, 15, true};
    json failures = json::array();
    int counts[3] = {0, 0, 0};
    int covers_iso = 0, graphs_iso = 0, converse_checked = 0;
    for (int i = 0; i < pairs; ++i) {
        Graph g = random_graph(rng, spec);
        Graph h;
        // Mix relabelled copies, independent graphs, and quotients of the
        // same double cover so both sides of each clause get exercised.
        int kind = i % 3;
        if (kind == 0) {
            h = relabel(g, rng.permutation(g.order()));
        } else if (kind == 1) {
            h = random_graph(rng, spec);
        } else {
            auto cover = kronecker_cover(g).cover.graph;
            auto odd = enumerate_odd_involutions(cover);
            h = quotient(cover, odd[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(odd.size()) - 1))]);
        }
        ++counts[kind];
        VerificationReport one = verify_theorem_1_1(g, h);
        if (!one.verdict()) failures.push_back(one.to_json());
        covers_iso += one.find("clause1")->detail["covers_isomorphic"].get<bool>();
        graphs_iso += one.find("clause2")->detail["graphs_isomorphic"].get<bool>();
        converse_checked += one.find("clause3_converse")->status != "hypothesis unmet";
    }
    r.add("all_clauses_agree", failures.empty(),
          {{"relabelled", counts[0]}, {"independent", counts[1]}, {"same_cover", counts[2]},
           {"covers_isomorphic", covers_iso}, {"graphs_isomorphic", graphs_iso}, {"converse_checked", converse_checked},
           {"failures", failures}});
    return r;
}

std::vector<VerificationReport> verify_all(std::uint64_t seed) {
    std::vector<VerificationReport> out;
    out.push_back(verify_prop_1_2(4, 3));
    out.push_back(verify_prop_1_2(3, 3));
    out.push_back(verify_theorem_1_1(petersen(), petersen()));
    auto ex = example_413(4, 3);
    out.push_back(verify_theorem_1_1(ex.g, ex.h));
    out.back().notes.push_back(kRepairNote);
    auto [a, b] = figure2_graphs();
    out.push_back(verify_theorem_1_1(a, b));
    out.push_back(verify_section5(seed));
    out.push_back(verify_theorem_1_1_suite(seed));
    return out;
}

}  // namespace boxcx
