#include "boxcx/reconstruct.hpp"

#include <algorithm>
#include <unordered_set>

#include "boxcx/covering.hpp"
#include "boxcx/iso.hpp"

namespace boxcx {

namespace {

// Dimension of the simplex whose face poset is P_{<=top}, if it is one.
// The minimal elements below top play the role of the simplex vertices.
std::optional<int> simplex_dimension_below(const Poset& p, int top, const Bitset& minimal) {
    const Bitset& down = p.down_set(top);
    Bitset atoms = down;
    atoms &= minimal;
    const std::size_t k = atoms.count();
    if (k == 0 || k > 30) return std::nullopt;
    if (down.count() != (std::size_t{1} << k) - 1) return std::nullopt;

    std::vector<int> atom_list = atoms.to_vector();
    std::vector<int> elems = down.to_vector();
    std::vector<std::uint32_t> mask(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < atom_list.size(); ++j)
            if (p.leq(atom_list[j], elems[i])) mask[i] |= std::uint32_t{1} << j;

    std::unordered_set<std::uint32_t> seen;
    for (auto m : mask)
        if (m == 0 || !seen.insert(m).second) return std::nullopt;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (p.leq(elems[i], elems[j]) != ((mask[i] & ~mask[j]) == 0)) return std::nullopt;
    return static_cast<int>(k) - 1;
}

Bitset minimal_set(const Poset& p) {
    Bitset m(static_cast<std::size_t>(p.size()));
    for (int e : p.minimal_elements()) m.set(static_cast<std::size_t>(e));
    return m;
}

}  // namespace

int element_level(const Poset& p, int e) {
    if (e < 0 || e >= p.size()) throw std::out_of_range("unknown poset element");
    return p.levels()[static_cast<std::size_t>(e)];
}

std::optional<int> is_simplex_face_poset(const Poset& p) {
    auto maximal = p.maximal_elements();
    if (maximal.size() != 1) return std::nullopt;
    return simplex_dimension_below(p, maximal.front(), minimal_set(p));
}

std::vector<StarElement> star_elements(const Poset& p) {
    const std::size_t n = static_cast<std::size_t>(p.size());
    Bitset minimal = minimal_set(p);
    Bitset simplex_like(n);
    for (int y = 0; y < p.size(); ++y)
        if (simplex_dimension_below(p, y, minimal)) simplex_like.set(static_cast<std::size_t>(y));

    // Condition (*) for finite posets: every element below e has a simplex
    // face poset as its down-set.
    Bitset star_condition(n);
    for (int e = 0; e < p.size(); ++e)
        if (p.down_set(e).subset_of(simplex_like)) star_condition.set(static_cast<std::size_t>(e));

    std::vector<StarElement> out;
    for (int e = 0; e < p.size(); ++e) {
        if (!star_condition.test(static_cast<std::size_t>(e))) continue;
        Bitset above = p.up_set(e);
        above &= star_condition;
        if (above.count() != 1) continue;
        Bitset atoms = p.down_set(e);
        atoms &= minimal;
        out.push_back({e, std::nullopt, static_cast<int>(atoms.count())});
    }
    return out;
}

BipartiteReconstruction reconstruct_bipartite_detailed(const Poset& p) {
    BipartiteReconstruction r;
    r.stars = star_elements(p);
    r.edge_of.assign(static_cast<std::size_t>(p.size()), {-1, -1});

    std::vector<int> vertex_of_star(static_cast<std::size_t>(p.size()), -1);
    int next = 0;
    for (auto& s : r.stars) {
        if (s.neighborhood_size >= 2) {
            s.center = next;
            vertex_of_star[static_cast<std::size_t>(s.element)] = next++;
            r.star_of.push_back(s.element);
            r.atom_of.push_back(-1);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int a : p.minimal_elements()) {
        std::vector<int> centers;
        p.up_set(a).for_each([&](std::size_t e) {
            if (vertex_of_star[e] >= 0) centers.push_back(vertex_of_star[e]);
        });
        std::pair<int, int> edge;
        if (centers.size() == 2) {
            edge = {centers[0], centers[1]};
        } else if (centers.size() == 1) {
            // A vertex of degree one hanging off a star vertex.
            edge = {centers[0], next};
            r.star_of.push_back(-1);
            r.atom_of.push_back(a);
            ++next;
        } else if (centers.empty()) {
            bool is_star = std::any_of(r.stars.begin(), r.stars.end(), [&](const StarElement& s) { return s.element == a; });
            if (!is_star) throw ValidationError("minimal element lies below no star element");
            // A whole K2 component.
            edge = {next, next + 1};
            for (int i = 0; i < 2; ++i) {
                r.star_of.push_back(-1);
                r.atom_of.push_back(a);
            }
            next += 2;
        } else {
            throw ValidationError("minimal element lies below more than two star elements");
        }
        r.edge_of[static_cast<std::size_t>(a)] = edge;
        edges.push_back(edge);
    }

    r.graph = Graph(next);
    for (auto [u, v] : edges) {
        if (u == v) throw ValidationError("reconstruction produced a loop");
        r.graph.add_edge(u, v);
    }

    std::optional<B0Complex> check;
    try {
        check = b0_complex(r.graph);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("reconstructed graph is not a valid B0 source: ") + e.what());
    }
    if (!poset_isomorphic(check->poset, p)) throw ValidationError("B0 of the reconstructed graph is not isomorphic to the input");
    return r;
}

Graph reconstruct_bipartite(const Poset& p) { return reconstruct_bipartite_detailed(p).graph; }

GraphReconstruction reconstruct_graph_z2_detailed(const Z2Poset& p) {
    try {
        validate_z2(p);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    BipartiteReconstruction r = reconstruct_bipartite_detailed(p.poset);
    const Graph& x = r.graph;
    const auto& t = p.involution;

    std::vector<int> vertex_of_star(static_cast<std::size_t>(p.poset.size()), -1);
    for (int v = 0; v < x.order(); ++v)
        if (r.star_of[v] >= 0) vertex_of_star[static_cast<std::size_t>(r.star_of[v])] = v;

    VertexMap tau(static_cast<std::size_t>(x.order()), -1);
    for (int v = 0; v < x.order(); ++v) {
        if (tau[v] >= 0) continue;
        if (r.star_of[v] >= 0) {
            int image = vertex_of_star[static_cast<std::size_t>(t[r.star_of[v]])];
            if (image < 0) throw ValidationError("involution maps a star element to a non-star element");
            tau[v] = image;
            continue;
        }
        const int atom = r.atom_of[v];
        const int image_atom = t[atom];
        auto [u, w] = r.edge_of[static_cast<std::size_t>(atom)];
        auto [iu, iw] = r.edge_of[static_cast<std::size_t>(image_atom)];
        if (iu < 0) throw ValidationError("involution maps an edge to a non-minimal element");
        if (r.star_of[u] >= 0) {
            // Degree-one vertex w hanging off the star vertex u.
            if (r.star_of[iu] < 0 || r.star_of[iw] >= 0) throw ValidationError("involution breaks a pendant edge");
            tau[w] = iw;
        } else if (image_atom == atom) {
            tau[u] = w;
            tau[w] = u;
        } else {
            if (r.star_of[iu] >= 0 || r.star_of[iw] >= 0) throw ValidationError("involution breaks a K2 component");
            tau[u] = iu;
            tau[w] = iw;
        }
    }
    for (int v = 0; v < x.order(); ++v)
        if (tau[v] < 0) throw ValidationError("transported involution is not total");

    try {
        if (!is_odd_involution_bipartite(x, tau)) throw ValidationError("transported involution is not odd");
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("transported involution is invalid: ") + e.what());
    }

    GraphReconstruction out{quotient(x, tau), x, tau};
    if (!z2_poset_isomorphic(box_complex(out.graph).z2, p))
        throw ValidationError("box complex of the reconstructed graph is not Z2-isomorphic to the input");
    return out;
}

Graph reconstruct_graph_z2(const Z2Poset& p) { return reconstruct_graph_z2_detailed(p).graph; }

}  // namespace boxcx
