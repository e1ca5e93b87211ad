#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boxcx/covering.hpp"
#include "boxcx/graph.hpp"
#include "boxcx/io.hpp"

namespace boxcx {

struct SubCheck {
    std::string name;
    /// "pass", "fail" or "hypothesis unmet".
    std::string status;
    json detail = json::object();
};

struct VerificationReport {
    std::string claim;
    json inputs = json::object();
    std::vector<SubCheck> checks;
    std::vector<std::string> notes;

    SubCheck& add(std::string name, bool ok, json detail = json::object());
    SubCheck& unmet(std::string name, json detail = json::object());
    /// Conjunction of the sub-checks; "hypothesis unmet" does not fail.
    bool verdict() const;
    const SubCheck* find(const std::string& name) const;
    json to_json() const;
};

/// The graph Z of the four-copy construction with its two involutions.
struct Example413 {
    ColoredGraph z;
    VertexMap tau1;
    VertexMap tau2;
    Graph g;  ///< Z / tau1, chromatic number n
    Graph h;  ///< Z / tau2, chromatic number m
};

/// Throws std::invalid_argument unless n, m >= 3, and std::logic_error if
/// the identifications are not compatible with the involutions.
Example413 example_413(int n, int m);

/// Two copies of K_n glued to K2 × K_m: vertex 1 of the first copy is
/// identified with (1,1), vertex 1 of the second with (2,1).
Graph clique_gluing(int n, int m);

VerificationReport verify_prop_1_2(int n, int m);
VerificationReport verify_theorem_1_1(const Graph& g, const Graph& h);

/// K_{1,4} and K_{2,3}.
std::pair<Graph, Graph> figure2_graphs();

VerificationReport verify_section5(std::uint64_t seed = 1, int random_graphs = 20);

/// verify_theorem_1_1 over random pairs of graphs without isolated vertices.
VerificationReport verify_theorem_1_1_suite(std::uint64_t seed = 1, int pairs = 30, int max_vertices = 6);

std::vector<VerificationReport> verify_all(std::uint64_t seed = 1);

}  // namespace boxcx
