#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcx/complexes.hpp"
#include "boxcx/graph.hpp"

namespace boxcx {

/// Raised when a poset handed to a reconstruction is not of the required
/// form: either the case analysis breaks down or the round trip fails.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element {{x}, N(x)} of B0(X), recognized from the order alone.
struct StarElement {
    int element = -1;
    /// Reconstructed vertex, when the element determines one. Absent for
    /// elements representing a whole K2 component.
    std::optional<int> center;
    /// |N(x)|: number of minimal elements below.
    int neighborhood_size = 0;
};

/// Length of the longest chain ending at e. Throws std::out_of_range.
int element_level(const Poset& p, int e);

/// n when P is the face poset of an n-simplex (nonempty subsets of an
/// (n+1)-set under inclusion), verified by an explicit isomorphism.
std::optional<int> is_simplex_face_poset(const Poset& p);

/// Elements e such that every y <= e has a simplex face poset as its
/// down-set, and e is maximal with this property.
std::vector<StarElement> star_elements(const Poset& p);

struct BipartiteReconstruction {
    Graph graph;
    std::vector<StarElement> stars;
    /// For every minimal element (an edge of the graph): its endpoints,
    /// indexed by poset element; (-1,-1) for non-minimal elements.
    std::vector<std::pair<int, int>> edge_of;
    /// Poset element of the star of each vertex, -1 for vertices of degree 1.
    std::vector<int> star_of;
    /// Minimal element each degree-1 vertex was created from, else -1.
    std::vector<int> atom_of;
};

/// A bipartite graph X without isolated vertices such that B0(X) is
/// isomorphic to P. Throws ValidationError when no such X is found.
BipartiteReconstruction reconstruct_bipartite_detailed(const Poset& p);
Graph reconstruct_bipartite(const Poset& p);

struct GraphReconstruction {
    Graph graph;
    /// Bipartite graph recovered from the underlying poset.
    Graph cover;
    /// Odd involution of `cover` transported from the poset involution.
    VertexMap involution;
};

/// A graph G without isolated vertices with B(G) isomorphic to P as Z2-posets.
/// Throws ValidationError when the equivariant round trip fails.
GraphReconstruction reconstruct_graph_z2_detailed(const Z2Poset& p);
Graph reconstruct_graph_z2(const Z2Poset& p);

}  // namespace boxcx
