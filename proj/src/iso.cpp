#include "boxcx/iso.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "boxcx/detail/refine.hpp"

namespace boxcx {

namespace {

constexpr std::uint32_t kCover = 0;
constexpr std::uint32_t kSwap = 1;
constexpr std::uint32_t kMember = 2;

std::uint64_t pack(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return (a << 42) ^ (b << 21) ^ c; }

detail::Structure poset_structure(const Poset& p) {
    detail::Structure s(p.size());
    for (int e = 0; e < p.size(); ++e) {
        s.labels[e] = pack(p.down_set(e).count(), p.up_set(e).count(), static_cast<std::uint64_t>(p.levels()[e]));
        for (int u : p.upper_covers(e)) s.add_arc(e, u, kCover);
    }
    return s;
}

detail::Structure z2_poset_structure(const Z2Poset& p) {
    detail::Structure s = poset_structure(p.poset);
    for (int e = 0; e < p.poset.size(); ++e) {
        int t = p.involution[e];
        // Fixed points are marked in the label; swapped pairs get an arc.
        if (t == e)
            s.labels[e] ^= std::uint64_t{1} << 63;
        else
            s.add_arc(e, t, kSwap);
    }
    return s;
}

// Nodes 0..n-1 are vertices, n.. are facets.
detail::Structure complex_structure(const SimplicialComplex& k) {
    const int n = k.vertex_count();
    detail::Structure s(n + static_cast<int>(k.facets().size()));
    for (std::size_t f = 0; f < k.facets().size(); ++f) {
        int node = n + static_cast<int>(f);
        s.labels[node] = 1 + k.facets()[f].size();
        for (int v : k.facets()[f]) s.add_arc(v, node, kMember);
    }
    return s;
}

detail::Structure z2_complex_structure(const Z2Complex& k) {
    detail::Structure s = complex_structure(k.complex);
    for (int v = 0; v < k.complex.vertex_count(); ++v) {
        int t = k.involution[v];
        if (t == v)
            s.labels[v] ^= std::uint64_t{1} << 63;
        else
            s.add_arc(v, t, kSwap);
    }
    return s;
}

}  // namespace

bool is_poset_isomorphism(const Poset& p, const Poset& q, std::span<const int> f) {
    if (p.size() != q.size() || static_cast<int>(f.size()) != p.size()) return false;
    std::vector<char> hit(static_cast<std::size_t>(q.size()), 0);
    for (int x : f) {
        if (x < 0 || x >= q.size() || hit[x]) return false;
        hit[x] = 1;
    }
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) != q.leq(f[a], f[b])) return false;
    return true;
}

bool is_z2_poset_isomorphism(const Z2Poset& p, const Z2Poset& q, std::span<const int> f) {
    if (!is_poset_isomorphism(p.poset, q.poset, f)) return false;
    for (int a = 0; a < p.poset.size(); ++a)
        if (f[p.involution[a]] != q.involution[f[a]]) return false;
    return true;
}

bool is_complex_isomorphism(const SimplicialComplex& k, const SimplicialComplex& l, std::span<const int> f) {
    if (k.vertex_count() != l.vertex_count() || static_cast<int>(f.size()) != k.vertex_count()) return false;
    if (k.facets().size() != l.facets().size()) return false;
    std::vector<char> hit(static_cast<std::size_t>(l.vertex_count()), 0);
    for (int x : f) {
        if (x < 0 || x >= l.vertex_count() || hit[x]) return false;
        hit[x] = 1;
    }
    std::set<std::vector<int>> target(l.facets().begin(), l.facets().end());
    std::set<std::vector<int>> image;
    for (const auto& facet : k.facets()) {
        std::vector<int> img;
        for (int v : facet) img.push_back(f[v]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
        image.insert(std::move(img));
    }
    return image.size() == target.size();
}

bool is_z2_complex_isomorphism(const Z2Complex& k, const Z2Complex& l, std::span<const int> f) {
    if (!is_complex_isomorphism(k.complex, l.complex, f)) return false;
    for (int v = 0; v < k.complex.vertex_count(); ++v)
        if (f[k.involution[v]] != l.involution[f[v]]) return false;
    return true;
}

std::optional<PosetMap> poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return std::nullopt;
    auto found = detail::find_isomorphism(poset_structure(p), poset_structure(q));
    if (!found) return std::nullopt;
    if (!is_poset_isomorphism(p, q, *found)) throw std::logic_error("poset isomorphism witness failed verification");
    return found;
}

std::optional<PosetMap> z2_poset_isomorphic(const Z2Poset& p, const Z2Poset& q) {
    if (p.poset.size() != q.poset.size()) return std::nullopt;
    auto found = detail::find_isomorphism(z2_poset_structure(p), z2_poset_structure(q));
    if (!found) return std::nullopt;
    if (!is_z2_poset_isomorphism(p, q, *found))
        throw std::logic_error("Z2-poset isomorphism witness failed verification");
    return found;
}

std::optional<std::vector<int>> complex_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.vertex_count() != l.vertex_count() || k.facets().size() != l.facets().size()) return std::nullopt;
    auto found = detail::find_isomorphism(complex_structure(k), complex_structure(l));
    if (!found) return std::nullopt;
    found->resize(static_cast<std::size_t>(k.vertex_count()));
    if (!is_complex_isomorphism(k, l, *found)) throw std::logic_error("complex isomorphism witness failed verification");
    return found;
}

std::optional<std::vector<int>> z2_complex_isomorphic(const Z2Complex& k, const Z2Complex& l) {
    if (k.complex.vertex_count() != l.complex.vertex_count() ||
        k.complex.facets().size() != l.complex.facets().size())
        return std::nullopt;
    auto found = detail::find_isomorphism(z2_complex_structure(k), z2_complex_structure(l));
    if (!found) return std::nullopt;
    found->resize(static_cast<std::size_t>(k.complex.vertex_count()));
    if (!is_z2_complex_isomorphism(k, l, *found))
        throw std::logic_error("Z2-complex isomorphism witness failed verification");
    return found;
}

}  // namespace boxcx
