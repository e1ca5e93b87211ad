#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxcx/bitset.hpp"

namespace boxcx {

/// Finite graph with a symmetric edge relation. Loops are allowed, parallel
/// edges are not. Vertices are the indices 0..order()-1; each carries a
/// display label used for file formats and reports.
class Graph {
public:
    Graph() = default;
    /// n vertices labelled "0".."n-1", no edges.
    explicit Graph(int n);
    explicit Graph(std::vector<std::string> labels);

    int order() const { return static_cast<int>(adj_.size()); }
    bool empty() const { return adj_.empty(); }

    /// Inserts {u,v} in both directions. Idempotent.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }
    bool has_any_loop() const;

    /// N(v), sorted ascending. Contains v itself when v is looped.
    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// N(v) as a word; requires order() <= 64.
    VertexSet neighbor_mask(int v) const;
    /// Vertices adjacent to every member of s (all vertices when s is empty).
    VertexSet common_neighbors(VertexSet s) const;

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find_label(const std::string& l) const;

    /// Undirected edge count; a loop counts once.
    std::size_t edge_count() const;
    /// Each undirected edge once as (u,v) with u <= v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
};

/// Vertex assignment source -> target; entry i is the image of vertex i.
using VertexMap = std::vector<int>;

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Throws std::invalid_argument unless f is a total map into target.
void check_vertex_map(const Graph& source, const Graph& target, std::span<const int> f);

bool is_homomorphism(const Graph& source, const Graph& target, std::span<const int> f);

/// Categorical product; vertex (i,j) gets index i*|H|+j and label "(a,b)".
Graph tensor_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, std::span<const int> keep);
/// Vertex i of g becomes vertex perm[i]; labels move with their vertices.
Graph relabel(const Graph& g, std::span<const int> perm);
/// Removes isolated vertices; `kept` (if given) receives the surviving ids.
Graph strip_isolated(const Graph& g, std::vector<int>* kept = nullptr);

bool has_isolated_vertex(const Graph& g);

// generators
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Looped path on {0..n}: edges |x-y| <= 1.
Graph interval_graph(int n);
Graph complete_bipartite(int p, int q);
Graph edgeless_graph(int n);
/// One vertex carrying a loop.
Graph looped_vertex();
/// Generalized Petersen graph GP(n,k).
Graph generalized_petersen(int n, int k);
Graph petersen();
Graph desargues();

/// Least n admitting a homomorphism to K_n. kInfinity when g has a loop.
int chromatic_number(const Graph& g);

/// Colors 1/2 by BFS from the least uncolored vertex, color 1 first.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

std::optional<VertexMap> graph_isomorphic(const Graph& g, const Graph& h);
bool is_graph_isomorphism(const Graph& g, const Graph& h, std::span<const int> f);

bool is_stiff(const Graph& g);

/// Components ordered by least vertex, each sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Shortest cycle length, 0 for forests. Loops count as length 1.
int girth(const Graph& g);

}  // namespace boxcx
