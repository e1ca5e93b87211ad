#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boxcx/complexes.hpp"
#include "boxcx/graph.hpp"

namespace boxcx {

/// Betti numbers b_0..b_dim over the field with two elements.
using BettiVector = std::vector<int>;

/// Ranks of the boundary maps, computed by column reduction with clearing.
/// Empty complex gives an empty vector.
BettiVector betti_gf2(const SimplicialComplex& k);

/// Number of connected components of the complex.
int complex_connected(const SimplicialComplex& k);

struct HomBounds {
    int max_vertices = 12;
    std::size_t max_maps = 2'000'000;
    /// Cap on homotopy-graph states visited by a single search.
    std::size_t max_states = 200'000;
};

/// All homomorphisms G -> H in lexicographic order of the assignment.
/// Throws std::invalid_argument when a graph exceeds max_vertices and
/// std::length_error when more than max_maps maps exist.
std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h, const HomBounds& bounds = {});

/// One-step ×-homotopy: (f(x), g(y)) ∈ E(H) for every (x,y) ∈ E(G), i.e.
/// (x,0) ↦ f(x), (x,1) ↦ g(x) is a homomorphism G × I_1 -> H.
bool one_step_homotopic(const Graph& g, const Graph& h, std::span<const int> f, std::span<const int> f2);

/// Whether f and g lie in one component of the one-step homotopy graph on
/// Hom(G,H). Throws std::invalid_argument for non-homomorphisms and
/// std::length_error when the search exceeds max_states.
bool x_homotopic(const Graph& g, const Graph& h, std::span<const int> f, std::span<const int> f2,
                 const HomBounds& bounds = {});

/// (f, h) with hf ≃ id_G and fh ≃ id_H, or nullopt.
std::optional<std::pair<VertexMap, VertexMap>> x_homotopy_equivalent(const Graph& g, const Graph& h,
                                                                     const HomBounds& bounds = {});

/// The maps F: K2×G -> K2×H and F': K2×H -> K2×G built from an isomorphism
/// of neighborhood complexes, with their certificate.
struct CoverHomotopyWitness {
    VertexMap f_map;      ///< F, indexed like kronecker_cover(G)
    VertexMap f_back;     ///< F'
    VertexMap g_choice;   ///< least y with f(N(x)) ⊆ N(y)
    VertexMap h_choice;   ///< least x with f^{-1}(N(y)) ⊆ N(x)
    bool back_forth_one_step = false;  ///< id ~ F'F in one step
    bool forth_back_one_step = false;  ///< id ~ FF' in one step
    bool certified() const { return back_forth_one_step && forth_back_one_step; }
};

/// `iso` maps vertices of G to vertices of H and must be an isomorphism
/// N(G) -> N(H). Throws std::invalid_argument if G or H has an isolated
/// vertex, if iso is not a complex isomorphism, or if no admissible choice
/// of g(x) or h(y) exists.
CoverHomotopyWitness prop410_witness(std::span<const int> iso, const Graph& g, const Graph& h);

}  // namespace boxcx
