#pragma once

#include <span>
#include <vector>

#include "boxcx/graph.hpp"

namespace boxcx {

/// A bipartite graph together with a chosen homomorphism to K2, stored as
/// colors 1/2 per vertex.
struct ColoredGraph {
    Graph graph;
    std::vector<int> coloring;
};

/// Throws std::invalid_argument if some edge is monochromatic or a color is
/// outside {1,2}.
void validate_colored(const ColoredGraph& x);

/// Throws std::invalid_argument unless t is a self-map of x's vertices with
/// t∘t = id that is also a graph homomorphism.
void validate_involution(const Graph& x, std::span<const int> t);

struct KroneckerCover {
    /// K2 × G colored by the first coordinate. Vertex (i,v) has index
    /// (i-1)*|G| + v and label "(i,label(v))".
    ColoredGraph cover;
    /// (1,v) <-> (2,v).
    VertexMap involution;
    /// Second projection onto G.
    VertexMap projection;
};

KroneckerCover kronecker_cover(const Graph& g);

/// True iff t swaps the two color classes at every vertex.
bool is_odd_involution_colored(const ColoredGraph& x, std::span<const int> t);

/// True iff no even-length path joins any x to t(x). Requires x bipartite.
bool is_odd_involution_bipartite(const Graph& x, std::span<const int> t);

/// A 2-coloring under which the bipartite-sense odd involution t flips
/// every color. Requires is_odd_involution_bipartite(x, t).
std::vector<int> coloring_for_odd_involution(const Graph& x, std::span<const int> t);

/// X/t: one vertex per orbit {x, t(x)}, indexed in order of least member and
/// labelled by that member. `orbit_of` receives the orbit index of each vertex.
Graph quotient(const Graph& x, std::span<const int> t, std::vector<int>* orbit_of = nullptr);

/// Requires f to be a homomorphism (throws std::invalid_argument otherwise).
bool is_covering_map(const Graph& source, const Graph& target, std::span<const int> f);

/// All odd involutions (bipartite sense) of x, in lexicographic order of the
/// map. Throws std::invalid_argument for non-bipartite or oversized input.
std::vector<VertexMap> enumerate_odd_involutions(const Graph& x, int max_vertices = 24);

struct DoubleCover {
    Graph graph;
    VertexMap projection;
};

/// Double cover from a Z/2 voltage per edge of g (aligned with g.edges()).
/// Vertex (v,s) has index 2v+s; an edge uv with voltage a lifts to
/// (u,s)-(v,s+a).
DoubleCover voltage_double_cover(const Graph& g, std::span<const int> voltage);

}  // namespace boxcx
