#include "boxcx/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace boxcx {

void validate_colored(const ColoredGraph& x) {
    if (static_cast<int>(x.coloring.size()) != x.graph.order())
        throw std::invalid_argument("coloring is not total");
    for (int c : x.coloring)
        if (c != 1 && c != 2) throw std::invalid_argument("colors must be 1 or 2");
    for (auto [u, v] : x.graph.edges())
        if (x.coloring[u] == x.coloring[v]) throw std::invalid_argument("coloring has a monochromatic edge");
}

void validate_involution(const Graph& x, std::span<const int> t) {
    check_vertex_map(x, x, t);
    for (int v = 0; v < x.order(); ++v)
        if (t[t[v]] != v) throw std::invalid_argument("map is not an involution");
    if (!is_homomorphism(x, x, t)) throw std::invalid_argument("involution is not a graph homomorphism");
}

KroneckerCover kronecker_cover(const Graph& g) {
    Graph k2 = complete_graph(2);
    KroneckerCover out;
    out.cover.graph = tensor_product(k2, g);
    const int n = g.order();
    out.cover.coloring.resize(static_cast<std::size_t>(2 * n));
    out.involution.resize(static_cast<std::size_t>(2 * n));
    out.projection.resize(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        out.cover.coloring[v] = 1;
        out.cover.coloring[n + v] = 2;
        out.involution[v] = n + v;
        out.involution[n + v] = v;
        out.projection[v] = v;
        out.projection[n + v] = v;
    }
    return out;
}

bool is_odd_involution_colored(const ColoredGraph& x, std::span<const int> t) {
    validate_colored(x);
    validate_involution(x.graph, t);
    for (int v = 0; v < x.graph.order(); ++v)
        if (x.coloring[t[v]] == x.coloring[v]) return false;
    return true;
}

namespace {

// Component index and BFS color of every vertex.
struct Bipartition {
    std::vector<int> component;
    std::vector<int> color;
};

Bipartition bipartition(const Graph& x) {
    auto coloring = two_coloring(x);
    if (!coloring) throw std::invalid_argument("graph is not bipartite");
    Bipartition b{std::vector<int>(static_cast<std::size_t>(x.order())), std::move(*coloring)};
    auto comps = connected_components(x);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) b.component[v] = static_cast<int>(c);
    return b;
}

}  // namespace

bool is_odd_involution_bipartite(const Graph& x, std::span<const int> t) {
    Bipartition b = bipartition(x);
    validate_involution(x, t);
    // Within one component every walk u..w has parity color(u) != color(w).
    for (int v = 0; v < x.order(); ++v)
        if (b.component[v] == b.component[t[v]] && b.color[v] == b.color[t[v]]) return false;
    return true;
}

std::vector<int> coloring_for_odd_involution(const Graph& x, std::span<const int> t) {
    if (!is_odd_involution_bipartite(x, t)) throw std::invalid_argument("involution is not odd");
    Bipartition b = bipartition(x);
    auto comps = connected_components(x);
    std::vector<int> color(static_cast<std::size_t>(x.order()), 0);
    for (const auto& comp : comps) {
        if (color[comp.front()] != 0) continue;
        for (int v : comp) color[v] = b.color[v];
        if (b.component[t[comp.front()]] != b.component[comp.front()])
            for (int v : comp) color[t[v]] = 3 - color[v];
    }
    return color;
}

Graph quotient(const Graph& x, std::span<const int> t, std::vector<int>* orbit_of) {
    check_vertex_map(x, x, t);
    for (int v = 0; v < x.order(); ++v)
        if (t[t[v]] != v) throw std::invalid_argument("map is not an involution");
    std::vector<int> orbit(static_cast<std::size_t>(x.order()), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < x.order(); ++v) {
        if (orbit[v] >= 0) continue;
        orbit[v] = orbit[t[v]] = static_cast<int>(labels.size());
        labels.push_back(x.label(v));
    }
    Graph out(std::move(labels));
    for (auto [u, v] : x.edges()) out.add_edge(orbit[u], orbit[v]);
    if (orbit_of) *orbit_of = std::move(orbit);
    return out;
}

bool is_covering_map(const Graph& source, const Graph& target, std::span<const int> f) {
    if (!is_homomorphism(source, target, f)) throw std::invalid_argument("covering check needs a homomorphism");
    std::vector<int> image;
    for (int v = 0; v < source.order(); ++v) {
        auto nv = source.neighbors(v);
        if (nv.size() != target.neighbors(f[v]).size()) return false;
        image.clear();
        for (int w : nv) image.push_back(f[w]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    }
    return true;
}

namespace {

class OddInvolutionSearch {
public:
    OddInvolutionSearch(const Graph& x, const Bipartition& b)
        : x_(x), b_(b), tau_(static_cast<std::size_t>(x.order()), -1) {}

    std::vector<VertexMap> run() {
        extend();
        return std::move(found_);
    }

private:
    bool consistent(int v, int w) const {
        // Neighbors of v already assigned must land next to w, and vice versa.
        for (int u : x_.neighbors(v))
            if (tau_[u] >= 0 && !x_.has_edge(tau_[u], w)) return false;
        for (int u : x_.neighbors(w))
            if (tau_[u] >= 0 && !x_.has_edge(tau_[u], v)) return false;
        return true;
    }

    void extend() {
        int v = 0;
        while (v < x_.order() && tau_[v] >= 0) ++v;
        if (v == x_.order()) {
            if (is_homomorphism(x_, x_, tau_)) found_.push_back(tau_);
            return;
        }
        for (int w = v + 1; w < x_.order(); ++w) {
            if (tau_[w] >= 0 || x_.degree(w) != x_.degree(v)) continue;
            if (b_.component[v] == b_.component[w] && b_.color[v] == b_.color[w]) continue;
            tau_[v] = w;
            tau_[w] = v;
            if (consistent(v, w)) extend();
            tau_[v] = tau_[w] = -1;
        }
    }

    const Graph& x_;
    const Bipartition& b_;
    VertexMap tau_;
    std::vector<VertexMap> found_;
};

}  // namespace

std::vector<VertexMap> enumerate_odd_involutions(const Graph& x, int max_vertices) {
    if (x.order() > max_vertices)
        throw std::invalid_argument("graph exceeds the odd-involution enumeration bound");
    Bipartition b = bipartition(x);
    return OddInvolutionSearch(x, b).run();
}

DoubleCover voltage_double_cover(const Graph& g, std::span<const int> voltage) {
    auto edges = g.edges();
    if (voltage.size() != edges.size()) throw std::invalid_argument("one voltage per edge required");
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v) {
        labels.push_back("(" + g.label(v) + ",0)");
        labels.push_back("(" + g.label(v) + ",1)");
    }
    DoubleCover out{Graph(std::move(labels)), VertexMap(static_cast<std::size_t>(2 * g.order()))};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int a = voltage[i] & 1;
        for (int s = 0; s < 2; ++s) out.graph.add_edge(2 * u + s, 2 * v + ((s + a) & 1));
    }
    for (int v = 0; v < g.order(); ++v) out.projection[2 * v] = out.projection[2 * v + 1] = v;
    return out;
}

}  // namespace boxcx
