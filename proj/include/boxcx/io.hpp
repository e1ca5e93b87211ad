#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "boxcx/complexes.hpp"
#include "boxcx/graph.hpp"

namespace boxcx {

using json = nlohmann::json;

/// Malformed input document. `field` names the offending member.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Integer-looking labels are written as JSON numbers, others as strings.
json label_to_json(const std::string& label);

/// {"vertices": [...], "edges": [[u,v], ...]}, each undirected edge once.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"vertices": [...], "facets": [[...], ...], "involution": {...}?}
json complex_to_json(const SimplicialComplex& k, const std::vector<int>* involution = nullptr);
struct ComplexDocument {
    SimplicialComplex complex;
    std::optional<std::vector<int>> involution;
};
ComplexDocument complex_from_json(const json& j);

/// {"elements": [...], "hasse": [[a,b], ...], "involution": {...}?}
json poset_to_json(const Poset& p, const std::vector<int>* involution = nullptr);
struct PosetDocument {
    Poset poset;
    std::optional<std::vector<int>> involution;
};
PosetDocument poset_from_json(const json& j);

/// {"map": {"v": "w", ...}} over vertex labels.
json vertex_map_to_json(const std::vector<std::string>& from, const std::vector<std::string>& to,
                        const std::vector<int>& map);
std::vector<int> vertex_map_from_json(const json& j, const Graph& source, const Graph& target);

/// A chromatic number, with kInfinity written as "infinity".
json chromatic_to_json(int chi);

/// Graphviz text for external visualization.
std::string graph_to_dot(const Graph& g);

}  // namespace boxcx
