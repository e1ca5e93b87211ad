#include "boxcx/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

namespace boxcx {

namespace {

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw FormatError(where, "expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; });
        if (!ok) throw FormatError(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
    }
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(key, "missing field");
    return *it;
}

std::string id_from_json(const json& v, const std::string& field) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw FormatError(field, "identifier must be a string or an integer");
}

struct IdTable {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;

    int at(const json& v, const std::string& field) const {
        auto id = id_from_json(v, field);
        auto it = index.find(id);
        if (it == index.end()) throw FormatError(field, "unknown identifier '" + id + "'");
        return it->second;
    }
};

IdTable read_ids(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw FormatError(field, "expected an array");
    IdTable t;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string f = field + "[" + std::to_string(i) + "]";
        auto id = id_from_json(arr[i], f);
        if (!t.index.emplace(id, static_cast<int>(t.labels.size())).second) throw FormatError(f, "duplicate identifier '" + id + "'");
        t.labels.push_back(id);
    }
    return t;
}

std::pair<int, int> read_pair(const json& v, const IdTable& ids, const std::string& field) {
    if (!v.is_array() || v.size() != 2) throw FormatError(field, "expected a pair");
    return {ids.at(v[0], field + "[0]"), ids.at(v[1], field + "[1]")};
}

IdTable ids_of(const std::vector<std::string>& labels) {
    IdTable t;
    t.labels = labels;
    for (std::size_t i = 0; i < labels.size(); ++i) t.index.emplace(labels[i], static_cast<int>(i));
    return t;
}

std::vector<int> read_map(const json& m, const IdTable& from, const IdTable& to, const std::string& field) {
    if (!m.is_object()) throw FormatError(field, "expected an object");
    std::vector<int> out(from.labels.size(), -1);
    for (auto it = m.begin(); it != m.end(); ++it) {
        std::string f = field + "." + it.key();
        int src = from.at(json(it.key()), f);
        out[static_cast<std::size_t>(src)] = to.at(it.value(), f);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] < 0) throw FormatError(field, "no image for '" + from.labels[i] + "'");
    return out;
}

json involution_json(const std::vector<std::string>& labels, const std::vector<int>& t) {
    json m = json::object();
    for (std::size_t i = 0; i < t.size(); ++i) m[labels[i]] = label_to_json(labels[static_cast<std::size_t>(t[i])]);
    return m;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json label_to_json(const std::string& label) {
    long long value = 0;
    auto [end, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
    if (ec == std::errc() && end == label.data() + label.size() && std::to_string(value) == label) return value;
    return label;
}

json graph_to_json(const Graph& g) {
    json vertices = json::array();
    for (const auto& l : g.labels()) vertices.push_back(label_to_json(l));
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({label_to_json(g.label(u)), label_to_json(g.label(v))});
    return {{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    reject_unknown(j, "", {"vertices", "edges"});
    IdTable ids = read_ids(require(j, "vertices"), "vertices");
    const json& edges = require(j, "edges");
    if (!edges.is_array()) throw FormatError("edges", "expected an array");
    Graph g(ids.labels);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = read_pair(edges[i], ids, "edges[" + std::to_string(i) + "]");
        g.add_edge(u, v);
    }
    return g;
}

json complex_to_json(const SimplicialComplex& k, const std::vector<int>* involution) {
    json vertices = json::array();
    for (const auto& l : k.labels()) vertices.push_back(label_to_json(l));
    json facets = json::array();
    for (const auto& f : k.facets()) {
        json face = json::array();
        for (int v : f) face.push_back(label_to_json(k.labels()[static_cast<std::size_t>(v)]));
        facets.push_back(face);
    }
    json out = {{"vertices", vertices}, {"facets", facets}};
    if (involution) out["involution"] = involution_json(k.labels(), *involution);
    return out;
}

ComplexDocument complex_from_json(const json& j) {
    reject_unknown(j, "", {"vertices", "facets", "involution"});
    IdTable ids = read_ids(require(j, "vertices"), "vertices");
    const json& facets = require(j, "facets");
    if (!facets.is_array()) throw FormatError("facets", "expected an array");
    std::vector<std::vector<int>> faces;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::string f = "facets[" + std::to_string(i) + "]";
        if (!facets[i].is_array() || facets[i].empty()) throw FormatError(f, "expected a nonempty array");
        std::vector<int> face;
        for (std::size_t k = 0; k < facets[i].size(); ++k) face.push_back(ids.at(facets[i][k], f + "[" + std::to_string(k) + "]"));
        faces.push_back(std::move(face));
    }
    ComplexDocument doc;
    try {
        doc.complex = SimplicialComplex(ids.labels, std::move(faces));
    } catch (const std::invalid_argument& e) {
        throw FormatError("facets", e.what());
    }
    if (auto it = j.find("involution"); it != j.end()) {
        doc.involution = read_map(*it, ids, ids, "involution");
        try {
            validate_z2(Z2Complex{doc.complex, *doc.involution});
        } catch (const std::invalid_argument& e) {
            throw FormatError("involution", e.what());
        }
    }
    return doc;
}

json poset_to_json(const Poset& p, const std::vector<int>* involution) {
    json elements = json::array();
    for (const auto& l : p.labels()) elements.push_back(label_to_json(l));
    json hasse = json::array();
    for (auto [a, b] : p.hasse()) hasse.push_back({label_to_json(p.label(a)), label_to_json(p.label(b))});
    json out = {{"elements", elements}, {"hasse", hasse}};
    if (involution) out["involution"] = involution_json(p.labels(), *involution);
    return out;
}

PosetDocument poset_from_json(const json& j) {
    reject_unknown(j, "", {"elements", "hasse", "involution"});
    IdTable ids = read_ids(require(j, "elements"), "elements");
    const json& hasse = require(j, "hasse");
    if (!hasse.is_array()) throw FormatError("hasse", "expected an array");
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < hasse.size(); ++i) {
        auto r = read_pair(hasse[i], ids, "hasse[" + std::to_string(i) + "]");
        if (r.first == r.second) throw FormatError("hasse[" + std::to_string(i) + "]", "reflexive pair");
        rel.push_back(r);
    }
    PosetDocument doc;
    try {
        doc.poset = Poset(ids.labels, rel);
    } catch (const std::invalid_argument& e) {
        throw FormatError("hasse", e.what());
    }
    if (auto it = j.find("involution"); it != j.end()) {
        doc.involution = read_map(*it, ids, ids, "involution");
        try {
            validate_z2(Z2Poset{doc.poset, *doc.involution});
        } catch (const std::invalid_argument& e) {
            throw FormatError("involution", e.what());
        }
    }
    return doc;
}

json vertex_map_to_json(const std::vector<std::string>& from, const std::vector<std::string>& to, const std::vector<int>& map) {
    json m = json::object();
    for (std::size_t i = 0; i < map.size(); ++i) m[from[i]] = label_to_json(to[static_cast<std::size_t>(map[i])]);
    return {{"map", m}};
}

std::vector<int> vertex_map_from_json(const json& j, const Graph& source, const Graph& target) {
    reject_unknown(j, "", {"map"});
    return read_map(require(j, "map"), ids_of(source.labels()), ids_of(target.labels()), "map");
}

json chromatic_to_json(int chi) {
    if (chi == kInfinity) return "infinity";
    return chi;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& l : g.labels()) out << "  " << dot_quote(l) << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << dot_quote(g.label(u)) << " -- " << dot_quote(g.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace boxcx
