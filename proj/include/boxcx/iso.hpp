#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxcx/complexes.hpp"

namespace boxcx {

/// Element bijection P -> Q.
using PosetMap = std::vector<int>;

/// An order isomorphism P -> Q, or nullopt. Finite posets are isomorphic iff
/// their Hasse diagrams are, so the search runs on covering pairs; the
/// witness is re-checked against the full order before it is returned.
std::optional<PosetMap> poset_isomorphic(const Poset& p, const Poset& q);

/// As poset_isomorphic, additionally commuting with both involutions.
std::optional<PosetMap> z2_poset_isomorphic(const Z2Poset& p, const Z2Poset& q);

/// A vertex bijection carrying the facets of K bijectively onto those of L.
std::optional<std::vector<int>> complex_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l);

/// As complex_isomorphic, additionally commuting with both involutions.
std::optional<std::vector<int>> z2_complex_isomorphic(const Z2Complex& k, const Z2Complex& l);

bool is_poset_isomorphism(const Poset& p, const Poset& q, std::span<const int> f);
bool is_z2_poset_isomorphism(const Z2Poset& p, const Z2Poset& q, std::span<const int> f);
bool is_complex_isomorphism(const SimplicialComplex& k, const SimplicialComplex& l, std::span<const int> f);
bool is_z2_complex_isomorphism(const Z2Complex& k, const Z2Complex& l, std::span<const int> f);

}  // namespace boxcx
