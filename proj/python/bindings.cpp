// Python extension. Graphs are native objects; posets, complexes and reports
// cross the boundary as JSON text and are decoded in the package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxcx/complexes.hpp"
#include "boxcx/covering.hpp"
#include "boxcx/homotopy.hpp"
#include "boxcx/io.hpp"
#include "boxcx/iso.hpp"
#include "boxcx/reconstruct.hpp"
#include "boxcx/verify.hpp"

namespace py = pybind11;
using namespace boxcx;

namespace {

std::string dump(const json& j) { return j.dump(); }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError("", e.what());
    }
}

std::optional<std::vector<std::pair<std::string, std::string>>> named(const std::vector<std::string>& from,
                                                                      const std::vector<std::string>& to,
                                                                      const std::optional<std::vector<int>>& w) {
    if (!w) return std::nullopt;
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < w->size(); ++i) out.emplace_back(from[i], to[static_cast<std::size_t>((*w)[i])]);
    return out;
}

Z2Poset z2_from(const std::string& text) {
    auto doc = poset_from_json(parse(text));
    if (!doc.involution) throw FormatError("involution", "missing field");
    return {doc.poset, *doc.involution};
}

std::string reports_json(const std::vector<VerificationReport>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(r.to_json());
    return dump(out);
}

}  // namespace

PYBIND11_MODULE(_boxcx, m) {
    m.doc() = "Box complexes, neighborhood complexes and Kronecker double covers";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<std::vector<std::string>>(), py::arg("labels"))
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("labels", &Graph::labels)
        .def("neighbors", [](const Graph& g, int v) {
            auto n = g.neighbors(v);
            return std::vector<int>(n.begin(), n.end());
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("generalized_petersen", &generalized_petersen);
    m.def("petersen", &petersen);
    m.def("desargues", &desargues);
    m.def("looped_vertex", &looped_vertex);
    m.def("example_pair", [](int n, int k) {
        auto ex = example_413(n, k);
        return std::make_pair(ex.g, ex.h);
    });

    m.def("graph_to_json", [](const Graph& g) { return dump(graph_to_json(g)); });
    m.def("graph_from_json", [](const std::string& text) { return graph_from_json(parse(text)); });
    m.def("graph_to_dot", &graph_to_dot);

    m.def("chromatic_number", [](const Graph& g) -> std::optional<int> {
        int chi = chromatic_number(g);
        if (chi == kInfinity) return std::nullopt;
        return chi;
    });
    m.def("is_bipartite", &is_bipartite);
    m.def("is_stiff", &is_stiff);
    m.def("is_connected", &is_connected);
    m.def("graph_isomorphism", [](const Graph& g, const Graph& h) {
        return named(g.labels(), h.labels(), graph_isomorphic(g, h));
    });

    m.def("kronecker_cover", [](const Graph& g) {
        auto k = kronecker_cover(g);
        return py::make_tuple(k.cover.graph, k.cover.coloring, k.involution);
    });
    m.def("quotient", [](const Graph& x, const std::vector<int>& t) {
        validate_involution(x, t);
        return quotient(x, t);
    });
    m.def("is_odd_involution", [](const Graph& x, const std::vector<int>& t) {
        validate_involution(x, t);
        return is_odd_involution_bipartite(x, t);
    });
    m.def("odd_involutions", [](const Graph& x, int max_vertices) { return enumerate_odd_involutions(x, max_vertices); },
          py::arg("x"), py::arg("max_vertices") = 24);

    m.def("box_complex_json", [](const Graph& g) {
        auto b = box_complex(g);
        return dump(poset_to_json(b.z2.poset, &b.z2.involution));
    });
    m.def("b0_complex_json", [](const Graph& x) { return dump(poset_to_json(b0_complex(x).poset)); });
    m.def("neighborhood_complex_json", [](const Graph& g) { return dump(complex_to_json(neighborhood_complex(g))); });
    m.def("bprime_complex_json", [](const Graph& g) {
        auto k = bprime_complex(g);
        return dump(complex_to_json(k.complex, &k.involution));
    });
    m.def("order_complex_json", [](const std::string& poset) {
        return dump(complex_to_json(order_complex(poset_from_json(parse(poset)).poset)));
    });

    m.def("poset_isomorphism", [](const std::string& a, const std::string& b) {
        auto p = poset_from_json(parse(a)).poset, q = poset_from_json(parse(b)).poset;
        return named(p.labels(), q.labels(), poset_isomorphic(p, q));
    });
    m.def("z2_poset_isomorphism", [](const std::string& a, const std::string& b) {
        auto p = z2_from(a), q = z2_from(b);
        return named(p.poset.labels(), q.poset.labels(), z2_poset_isomorphic(p, q));
    });
    m.def("complex_isomorphism", [](const std::string& a, const std::string& b) {
        auto k = complex_from_json(parse(a)).complex, l = complex_from_json(parse(b)).complex;
        return named(k.labels(), l.labels(), complex_isomorphic(k, l));
    });

    m.def("reconstruct_bipartite", [](const std::string& poset) {
        return reconstruct_bipartite(poset_from_json(parse(poset)).poset);
    });
    m.def("reconstruct_graph", [](const std::string& poset) { return reconstruct_graph_z2(z2_from(poset)); });

    m.def("betti_numbers", [](const std::string& complex) { return betti_gf2(complex_from_json(parse(complex)).complex); });

    m.def("verify_prop_1_2_json", [](int n, int k) { return dump(verify_prop_1_2(n, k).to_json()); });
    m.def("verify_pair_json", [](const Graph& g, const Graph& h) { return dump(verify_theorem_1_1(g, h).to_json()); });
    m.def("verify_all_json", [](std::uint64_t seed) { return reports_json(verify_all(seed)); }, py::arg("seed") = 1);
}
