#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxcx/bitset.hpp"
#include "boxcx/covering.hpp"
#include "boxcx/graph.hpp"

namespace boxcx {

/// Finite abstract simplicial complex stored by its facets. Vertices are the
/// indices 0..vertex_count()-1 with display labels. The empty face is implied
/// and never listed.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// `faces` may be any generating family; it is reduced to its maximal
    /// members. Throws std::invalid_argument if a vertex lies in no face.
    SimplicialComplex(std::vector<std::string> labels, std::vector<std::vector<int>> faces);

    /// Skips the maximality reduction; the caller guarantees the family is
    /// already an antichain of distinct nonempty faces.
    static SimplicialComplex from_facets(std::vector<std::string> labels, std::vector<std::vector<int>> facets);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    /// -1 for the empty complex.
    int dimension() const;
    bool empty() const { return facets_.empty(); }

    bool contains(std::span<const int> face) const;
    /// All faces of the given dimension, each sorted, in lexicographic order.
    std::vector<std::vector<int>> faces(int dim) const;
    /// Number of faces per dimension.
    std::vector<std::size_t> f_vector() const;

    /// Induced subcomplex on the given vertices (renumbered in the given order).
    SimplicialComplex induced(std::span<const int> keep) const;

    bool operator==(const SimplicialComplex& o) const = default;

private:
    void finalize();

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> facets_;
};

/// Finite poset with its Hasse diagram and reachability closure, computed
/// once at construction.
class Poset {
public:
    Poset() = default;
    /// `relations` lists pairs (a,b) meaning a < b; the order is their
    /// reflexive-transitive closure. Throws std::invalid_argument on a cycle.
    Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int a, int b) const { return down_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    /// Elements <= e, including e.
    const Bitset& down_set(int e) const { return down_[static_cast<std::size_t>(e)]; }
    /// Elements >= e, including e.
    const Bitset& up_set(int e) const { return up_[static_cast<std::size_t>(e)]; }

    std::span<const int> upper_covers(int e) const { return upper_[static_cast<std::size_t>(e)]; }
    std::span<const int> lower_covers(int e) const { return lower_[static_cast<std::size_t>(e)]; }
    /// Covering pairs (a,b), a covered by b, sorted.
    std::vector<std::pair<int, int>> hasse() const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    /// Longest chain ending at each element (0 for minimal elements).
    const std::vector<int>& levels() const { return level_; }

    Poset induced(std::span<const int> keep) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> upper_;
    std::vector<std::vector<int>> lower_;
    std::vector<Bitset> down_;
    std::vector<Bitset> up_;
    std::vector<int> level_;
};

/// Poset with an order-preserving involution.
struct Z2Poset {
    Poset poset;
    std::vector<int> involution;
};

/// Simplicial complex with a simplicial involution on its vertices.
struct Z2Complex {
    SimplicialComplex complex;
    std::vector<int> involution;
};

/// Throws std::invalid_argument unless the involution squares to the identity
/// and preserves the order.
void validate_z2(const Z2Poset& p);
/// Throws std::invalid_argument unless the involution squares to the identity
/// and carries facets to facets.
void validate_z2(const Z2Complex& k);

/// (first, second) vertex sets of a box-complex element.
struct SetPair {
    VertexSet first = 0;
    VertexSet second = 0;
    bool operator==(const SetPair&) const = default;
};

/// B(G): pairs (σ,τ) of nonempty vertex sets with σ×τ ⊆ E(G), ordered
/// componentwise, with the swap involution.
struct BoxComplex {
    Z2Poset z2;
    std::vector<SetPair> pairs;
    /// Index of the element with this payload, or -1.
    int find(SetPair p) const;
};

/// B0(X) for a bipartite X. Each unordered pair {σ,τ} is stored with
/// `first` inside color class 1 of `coloring`.
struct B0Complex {
    Poset poset;
    std::vector<SetPair> pairs;
    std::vector<int> coloring;
    int find(SetPair p) const;
};

SimplicialComplex neighborhood_complex(const Graph& g);
/// Induced subcomplex of N(X) on the non-isolated vertices of color i.
SimplicialComplex colored_neighborhood_complex(const ColoredGraph& x, int color);

BoxComplex box_complex(const Graph& g);
/// Throws std::invalid_argument for non-bipartite input.
B0Complex b0_complex(const Graph& x);
/// B0 with the given coloring (validated).
B0Complex b0_complex(const ColoredGraph& x);
/// B0(X) as a Z2-poset through a graph involution t of X that maps every
/// unordered pair to an unordered pair (any automorphism does).
Z2Poset b0_z2(const B0Complex& b0, const Graph& x, std::span<const int> t);

/// The explicit correspondence B(G) -> B0(K2 × G), (σ,τ) ↦ {σ×{1}, τ×{2}},
/// and its inverse given by projecting to G.
struct PhiIso {
    BoxComplex box;
    KroneckerCover cover;
    B0Complex b0;
    std::vector<int> phi;
    std::vector<int> psi;
};
PhiIso phi_iso(const Graph& g);
/// Checks that phi and psi are mutually inverse, order preserving in both
/// directions, and intertwine the two involutions.
bool verify_phi_iso(const PhiIso& iso);

Poset face_poset(const SimplicialComplex& k);
/// Faces are chains; facets are maximal chains. Throws std::length_error if
/// the number of maximal chains exceeds max_facets.
SimplicialComplex order_complex(const Poset& p, std::size_t max_facets = 5'000'000);

/// B'(G) on V(N(G)) × {0,1}; vertex (x,s) has index 2*rank(x)+s where rank
/// counts non-isolated vertices. Faces σ⊎τ with σ,τ ∈ N(G) ∪ {∅} and
/// σ×τ ⊆ E(G). Throws std::invalid_argument if G has a loop.
Z2Complex bprime_complex(const Graph& g);
/// B'_0(X) on the non-isolated vertices of X: faces σ ∪ τ with σ ∈ N_1,
/// τ ∈ N_2, σ×τ ⊆ E(X).
SimplicialComplex bprime0_complex(const ColoredGraph& x);
/// B'_0 of a colored graph with an involution mapping the complex to itself.
Z2Complex bprime0_z2(const ColoredGraph& x, std::span<const int> t);

/// Display form of a vertex set, e.g. "{1,3}".
std::string set_label(const Graph& g, VertexSet s);

}  // namespace boxcx
