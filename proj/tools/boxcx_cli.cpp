#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "boxcx/complexes.hpp"
#include "boxcx/covering.hpp"
#include "boxcx/homotopy.hpp"
#include "boxcx/io.hpp"
#include "boxcx/iso.hpp"
#include "boxcx/random.hpp"
#include "boxcx/reconstruct.hpp"
#include "boxcx/verify.hpp"

using namespace boxcx;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2 };

/// Input problem tied to a file; reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 1;
    int max_vertices = 12;
    int max_involution_vertices = 24;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class Fn>
auto parse_file(const std::string& path, Fn&& fn) {
    json j = read_json(path);
    try {
        return fn(j);
    } catch (const FormatError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Graph load_graph(const std::string& path) { return parse_file(path, [](const json& j) { return graph_from_json(j); }); }
ComplexDocument load_complex(const std::string& path) { return parse_file(path, [](const json& j) { return complex_from_json(j); }); }
PosetDocument load_poset(const std::string& path) { return parse_file(path, [](const json& j) { return poset_from_json(j); }); }
VertexMap load_map(const std::string& path, const Graph& from, const Graph& to) {
    return parse_file(path, [&](const json& j) { return vertex_map_from_json(j, from, to); });
}

Z2Poset require_z2(const PosetDocument& d, const std::string& path) {
    if (!d.involution) throw InputError(path + ": involution: missing field");
    return {d.poset, *d.involution};
}

void emit_text(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError(o.out + ": cannot write file");
    f << text;
}

void emit(const Options& o, const json& j) { emit_text(o, j.dump(2) + "\n"); }

void emit_graph(const Options& o, const Graph& g) {
    if (o.format == "dot")
        emit_text(o, graph_to_dot(g));
    else
        emit(o, graph_to_json(g));
}

json map_json(const std::vector<std::string>& from, const std::vector<std::string>& to, const std::optional<std::vector<int>>& w) {
    if (!w) return nullptr;
    return vertex_map_to_json(from, to, *w)["map"];
}

int iso_answer(const Options& o, const std::vector<std::string>& from, const std::vector<std::string>& to,
               const std::optional<std::vector<int>>& w) {
    json out = {{"isomorphic", w.has_value()}};
    if (w) out["witness"] = map_json(from, to, w);
    emit(o, out);
    std::cerr << (w ? "isomorphic\n" : "not isomorphic\n");
    return w ? kOk : kFailed;
}

int report_answer(const Options& o, const std::vector<VerificationReport>& reports, bool as_array) {
    json out = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        out.push_back(r.to_json());
        ok = ok && r.verdict();
        std::cerr << r.claim << ": " << (r.verdict() ? "pass" : "fail") << "\n";
        for (const auto& c : r.checks)
            if (c.status != "pass") std::cerr << "  " << c.name << ": " << c.status << "\n";
    }
    emit(o, as_array ? out : out.front());
    return ok ? kOk : kFailed;
}

Graph generate(const std::string& name, const std::vector<int>& p, std::uint64_t seed) {
    auto need = [&](std::size_t k) {
        if (p.size() != k) throw InputError("graph gen " + name + ": expected " + std::to_string(k) + " integer parameter(s)");
    };
    if (name == "complete") return need(1), complete_graph(p[0]);
    if (name == "cycle") return need(1), cycle_graph(p[0]);
    if (name == "path") return need(1), path_graph(p[0]);
    if (name == "interval") return need(1), interval_graph(p[0]);
    if (name == "edgeless") return need(1), edgeless_graph(p[0]);
    if (name == "complete-bipartite") return need(2), complete_bipartite(p[0], p[1]);
    if (name == "generalized-petersen") return need(2), generalized_petersen(p[0], p[1]);
    if (name == "petersen") return need(0), petersen();
    if (name == "desargues") return need(0), desargues();
    if (name == "looped-vertex") return need(0), looped_vertex();
    if (name == "example-g") return need(2), example_413(p[0], p[1]).g;
    if (name == "example-h") return need(2), example_413(p[0], p[1]).h;
    if (name == "example-z") return need(2), example_413(p[0], p[1]).z.graph;
    if (name == "figure2-star") return need(0), figure2_graphs().first;
    if (name == "figure2-k23") return need(0), figure2_graphs().second;
    if (name == "random") {
        // vertices, edge percent, loop percent
        need(3);
        Rng rng(seed);
        return random_graph(rng, {p[0], p[0], p[1], p[2], false});
    }
    throw InputError("graph gen: unknown generator '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Box complexes, neighborhood complexes and Kronecker double covers of finite graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--out", o.out, "Write the JSON result to this file instead of standard output");
    app.add_option("--format", o.format, "Output format for graphs")->check(CLI::IsMember({"json", "dot"}));
    app.add_option("--seed", o.seed, "Seed for randomized suites and generators");
    app.add_option("--max-vertices", o.max_vertices, "Bound for exhaustive homomorphism searches")->check(CLI::PositiveNumber);
    app.add_option("--max-involution-vertices", o.max_involution_vertices, "Bound for odd-involution enumeration")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;
    std::string a, b, c, d, name;
    std::vector<int> params;
    int n = 4, m = 3, trials = 20, pairs = 30;

    auto* graph = app.add_subcommand("graph", "Graph operations")->require_subcommand(1);
    auto* gen = graph->add_subcommand("gen", "Generate a named graph");
    gen->add_option("name", name, "complete, cycle, path, interval, edgeless, complete-bipartite, generalized-petersen, petersen, "
                                  "desargues, looped-vertex, example-g, example-h, example-z, figure2-star, figure2-k23, random")
        ->required();
    gen->add_option("params", params, "Integer parameters");
    gen->callback([&] { action = [&] { return emit_graph(o, generate(name, params, o.seed)), int(kOk); }; });

    auto* chrom = graph->add_subcommand("chromatic", "Exact chromatic number");
    chrom->add_option("graph", a)->required();
    chrom->callback([&] {
        action = [&] {
            emit(o, {{"chromatic", chromatic_to_json(chromatic_number(load_graph(a)))}});
            return int(kOk);
        };
    });

    auto* giso = graph->add_subcommand("iso", "Graph isomorphism");
    giso->add_option("a", a)->required();
    giso->add_option("b", b)->required();
    giso->callback([&] {
        action = [&] {
            Graph g = load_graph(a), h = load_graph(b);
            return iso_answer(o, g.labels(), h.labels(), graph_isomorphic(g, h));
        };
    });

    auto* cover = app.add_subcommand("cover", "Double covers and involutions")->require_subcommand(1);
    auto* kron = cover->add_subcommand("kron", "Kronecker double cover K2 x G");
    kron->add_option("graph", a)->required();
    kron->callback([&] {
        action = [&] {
            auto k = kronecker_cover(load_graph(a));
            if (o.format == "dot") return emit_text(o, graph_to_dot(k.cover.graph)), int(kOk);
            json coloring = json::object();
            for (int v = 0; v < k.cover.graph.order(); ++v) coloring[k.cover.graph.label(v)] = k.cover.coloring[v];
            emit(o, {{"graph", graph_to_json(k.cover.graph)},
                     {"coloring", coloring},
                     {"involution", vertex_map_to_json(k.cover.graph.labels(), k.cover.graph.labels(), k.involution)}});
            return int(kOk);
        };
    });

    auto load_involution = [&](const Graph& x) {
        VertexMap t = load_map(b, x, x);
        try {
            validate_involution(x, t);
        } catch (const std::invalid_argument& e) {
            throw InputError(b + ": map: " + e.what());
        }
        return t;
    };

    auto* quot = cover->add_subcommand("quotient", "Quotient X / t");
    quot->add_option("graph", a)->required();
    quot->add_option("involution", b)->required();
    quot->callback([&] {
        action = [&] {
            Graph x = load_graph(a);
            return emit_graph(o, quotient(x, load_involution(x))), int(kOk);
        };
    });

    auto* odd = cover->add_subcommand("check-odd", "Whether an involution of a bipartite graph is odd");
    odd->add_option("graph", a)->required();
    odd->add_option("involution", b)->required();
    odd->callback([&] {
        action = [&] {
            Graph x = load_graph(a);
            VertexMap t = load_involution(x);
            if (!is_bipartite(x)) throw InputError(a + ": graph is not bipartite");
            bool result = is_odd_involution_bipartite(x, t);
            emit(o, {{"odd", result}});
            return result ? int(kOk) : int(kFailed);
        };
    });

    auto* odds = cover->add_subcommand("odd-involutions", "List all odd involutions of a bipartite graph");
    odds->add_option("graph", a)->required();
    odds->callback([&] {
        action = [&] {
            Graph x = load_graph(a);
            json out = json::array();
            try {
                for (const auto& t : enumerate_odd_involutions(x, o.max_involution_vertices))
                    out.push_back(vertex_map_to_json(x.labels(), x.labels(), t));
            } catch (const std::invalid_argument& e) {
                throw InputError(a + ": " + e.what());
            }
            emit(o, out);
            return int(kOk);
        };
    });

    auto* cx = app.add_subcommand("complex", "Build complexes and posets")->require_subcommand(1);
    auto add_graph_complex = [&](const char* sub, const char* help, std::function<json(const Graph&)> build) {
        auto* s = cx->add_subcommand(sub, help);
        s->add_option("graph", a)->required();
        s->callback([&, build] {
            action = [&, build] {
                Graph g = load_graph(a);
                try {
                    emit(o, build(g));
                } catch (const std::invalid_argument& e) {
                    throw InputError(a + ": " + e.what());
                }
                return int(kOk);
            };
        });
    };
    add_graph_complex("nbhd", "Neighborhood complex N(G)", [](const Graph& g) { return complex_to_json(neighborhood_complex(g)); });
    add_graph_complex("box", "Box complex B(G) with its involution", [](const Graph& g) {
        auto b = box_complex(g);
        return poset_to_json(b.z2.poset, &b.z2.involution);
    });
    add_graph_complex("b0", "B0 of a bipartite graph", [](const Graph& g) { return poset_to_json(b0_complex(g).poset); });
    add_graph_complex("bprime", "B'(G) with its involution", [](const Graph& g) {
        auto b = bprime_complex(g);
        return complex_to_json(b.complex, &b.involution);
    });
    add_graph_complex("bprime0", "B'0 of a bipartite graph", [](const Graph& g) {
        auto col = two_coloring(g);
        if (!col) throw std::invalid_argument("graph is not bipartite");
        return complex_to_json(bprime0_complex({g, *col}));
    });

    auto* oc = cx->add_subcommand("order-complex", "Order complex of a poset");
    oc->add_option("poset", a)->required();
    oc->callback([&] {
        action = [&] {
            auto p = load_poset(a);
            if (p.involution) {
                // Chains of a Z2-poset carry the induced involution.
                emit(o, complex_to_json(order_complex(p.poset), &*p.involution));
            } else {
                emit(o, complex_to_json(order_complex(p.poset)));
            }
            return int(kOk);
        };
    });
    auto* fp = cx->add_subcommand("face-poset", "Face poset of a complex");
    fp->add_option("complex", a)->required();
    fp->callback([&] { action = [&] { return emit(o, poset_to_json(face_poset(load_complex(a).complex))), int(kOk); }; });

    auto* iso = app.add_subcommand("iso", "Isomorphism of posets and complexes")->require_subcommand(1);
    iso->add_subcommand("poset", "Order isomorphism")->callback([&] {
        action = [&] {
            auto p = load_poset(a), q = load_poset(b);
            return iso_answer(o, p.poset.labels(), q.poset.labels(), poset_isomorphic(p.poset, q.poset));
        };
    });
    iso->add_subcommand("z2poset", "Equivariant order isomorphism")->callback([&] {
        action = [&] {
            auto p = require_z2(load_poset(a), a), q = require_z2(load_poset(b), b);
            return iso_answer(o, p.poset.labels(), q.poset.labels(), z2_poset_isomorphic(p, q));
        };
    });
    iso->add_subcommand("complex", "Simplicial isomorphism")->callback([&] {
        action = [&] {
            auto k = load_complex(a), l = load_complex(b);
            return iso_answer(o, k.complex.labels(), l.complex.labels(), complex_isomorphic(k.complex, l.complex));
        };
    });
    iso->add_subcommand("z2complex", "Equivariant simplicial isomorphism")->callback([&] {
        action = [&] {
            auto k = load_complex(a), l = load_complex(b);
            if (!k.involution) throw InputError(a + ": involution: missing field");
            if (!l.involution) throw InputError(b + ": involution: missing field");
            return iso_answer(o, k.complex.labels(), l.complex.labels(),
                              z2_complex_isomorphic({k.complex, *k.involution}, {l.complex, *l.involution}));
        };
    });
    for (auto* s : iso->get_subcommands({})) {
        s->add_option("a", a)->required();
        s->add_option("b", b)->required();
    }

    auto* rec = app.add_subcommand("reconstruct", "Recover a graph from its poset")->require_subcommand(1);
    auto reconstruct_answer = [&](std::function<Graph()> run) {
        try {
            Graph g = run();
            emit(o, {{"graph", graph_to_json(g)}, {"validated", true}});
            std::cerr << "reconstructed " << g.order() << " vertices, round trip verified\n";
            return int(kOk);
        } catch (const ValidationError& e) {
            emit(o, {{"validated", false}, {"error", e.what()}});
            std::cerr << "validation failed: " << e.what() << "\n";
            return int(kFailed);
        }
    };
    rec->add_subcommand("b0", "Bipartite graph from B0")->callback([&] {
        action = [&] {
            auto p = load_poset(a);
            return reconstruct_answer([&] { return reconstruct_bipartite(p.poset); });
        };
    });
    rec->add_subcommand("box", "Graph from the Z2-poset B(G)")->callback([&] {
        action = [&] {
            auto p = require_z2(load_poset(a), a);
            return reconstruct_answer([&] { return reconstruct_graph_z2(p); });
        };
    });
    for (auto* s : rec->get_subcommands({})) s->add_option("poset", a)->required();

    auto* hom = app.add_subcommand("homology", "GF(2) Betti numbers of a complex");
    hom->add_option("complex", a)->required();
    hom->callback([&] {
        action = [&] {
            auto k = load_complex(a).complex;
            emit(o, {{"betti", betti_gf2(k)}, {"components", complex_connected(k)}});
            return int(kOk);
        };
    });

    auto* xh = app.add_subcommand("xhom", "x-homotopy of graph homomorphisms")->require_subcommand(1);
    auto* xcheck = xh->add_subcommand("check", "Whether two homomorphisms G -> H are x-homotopic");
    xcheck->add_option("G", a)->required();
    xcheck->add_option("H", b)->required();
    xcheck->add_option("f1", c)->required();
    xcheck->add_option("f2", d)->required();
    xcheck->callback([&] {
        action = [&] {
            Graph g = load_graph(a), h = load_graph(b);
            VertexMap f1 = load_map(c, g, h), f2 = load_map(d, g, h);
            if (!is_homomorphism(g, h, f1)) throw InputError(c + ": map: not a homomorphism");
            if (!is_homomorphism(g, h, f2)) throw InputError(d + ": map: not a homomorphism");
            HomBounds bounds;
            bounds.max_vertices = o.max_vertices;
            bool result = x_homotopic(g, h, f1, f2, bounds);
            emit(o, {{"homotopic", result}, {"one_step", one_step_homotopic(g, h, f1, f2)}});
            return result ? int(kOk) : int(kFailed);
        };
    });
    auto* xeq = xh->add_subcommand("equiv", "Search for an x-homotopy equivalence");
    xeq->add_option("G", a)->required();
    xeq->add_option("H", b)->required();
    xeq->callback([&] {
        action = [&] {
            Graph g = load_graph(a), h = load_graph(b);
            HomBounds bounds;
            bounds.max_vertices = o.max_vertices;
            std::optional<std::pair<VertexMap, VertexMap>> w;
            try {
                w = x_homotopy_equivalent(g, h, bounds);
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string("xhom equiv: ") + e.what());
            }
            json out = {{"equivalent", w.has_value()}};
            if (w) {
                out["f"] = vertex_map_to_json(g.labels(), h.labels(), w->first)["map"];
                out["h"] = vertex_map_to_json(h.labels(), g.labels(), w->second)["map"];
            }
            emit(o, out);
            return w ? int(kOk) : int(kFailed);
        };
    });

    auto* ver = app.add_subcommand("verify", "Named end-to-end checks")->require_subcommand(1);
    auto* p12 = ver->add_subcommand("prop12", "Four-copy pair with equal box posets and different chromatic numbers");
    p12->add_option("--n", n)->check(CLI::Range(3, 5));
    p12->add_option("--m", m)->check(CLI::Range(3, 5));
    p12->callback([&] { action = [&] { return report_answer(o, {verify_prop_1_2(n, m)}, false); }; });
    auto* t11 = ver->add_subcommand("thm11", "Three-clause equivalence check for a pair of graphs");
    t11->add_option("G", a)->required();
    t11->add_option("H", b)->required();
    t11->callback([&] { action = [&] { return report_answer(o, {verify_theorem_1_1(load_graph(a), load_graph(b))}, false); }; });
    auto* s5 = ver->add_subcommand("section5", "B'0 comparison and equivariant B' suite");
    s5->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    s5->callback([&] { action = [&] { return report_answer(o, {verify_section5(o.seed, trials)}, false); }; });
    auto* suite = ver->add_subcommand("thm11-suite", "Three-clause check over random pairs");
    suite->add_option("--pairs", pairs)->check(CLI::NonNegativeNumber);
    suite->callback([&] { action = [&] { return report_answer(o, {verify_theorem_1_1_suite(o.seed, pairs)}, false); }; });
    ver->add_subcommand("all", "Every named check")->callback([&] { action = [&] { return report_answer(o, verify_all(o.seed), true); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }
    std::cerr << "seed " << o.seed << "\n";
    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::length_error& e) {
        std::cerr << "error: search bound exceeded: " << e.what() << "\n";
        return kBadInput;
    }
}
