#include "boxcx/complexes.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace boxcx {

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<std::vector<int>> faces)
    : labels_(std::move(labels)) {
    const int n = vertex_count();
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= n) throw std::invalid_argument("face refers to an unknown vertex");
    }
    faces.erase(std::remove_if(faces.begin(), faces.end(), [](const auto& f) { return f.empty(); }), faces.end());
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    std::vector<Bitset> kept_bits;
    for (auto& f : faces) {
        Bitset bits(static_cast<std::size_t>(n));
        for (int v : f) bits.set(static_cast<std::size_t>(v));
        bool dominated = false;
        for (const auto& k : kept_bits)
            if (bits.subset_of(k)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        kept_bits.push_back(std::move(bits));
        facets_.push_back(std::move(f));
    }
    finalize();
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels, std::vector<std::vector<int>> facets) {
    SimplicialComplex k;
    k.labels_ = std::move(labels);
    for (auto& f : facets) std::sort(f.begin(), f.end());
    k.facets_ = std::move(facets);
    k.finalize();
    return k;
}

void SimplicialComplex::finalize() {
    std::sort(facets_.begin(), facets_.end());
    std::vector<char> covered(labels_.size(), 0);
    for (const auto& f : facets_)
        for (int v : f) covered[static_cast<std::size_t>(v)] = 1;
    for (char c : covered)
        if (!c) throw std::invalid_argument("every vertex must lie in some facet");
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains(std::span<const int> face) const {
    std::vector<int> f(face.begin(), face.end());
    std::sort(f.begin(), f.end());
    if (f.empty()) return true;
    for (const auto& facet : facets_)
        if (std::includes(facet.begin(), facet.end(), f.begin(), f.end())) return true;
    return false;
}

std::vector<std::vector<int>> SimplicialComplex::faces(int dim) const {
    std::vector<std::vector<int>> out;
    if (dim < 0) return out;
    const std::size_t k = static_cast<std::size_t>(dim) + 1;
    std::vector<int> pick;
    for (const auto& facet : facets_) {
        if (facet.size() < k) continue;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (pick.size() == k) {
                out.push_back(pick);
                return;
            }
            for (std::size_t i = start; i + (k - pick.size()) <= facet.size(); ++i) {
                pick.push_back(facet[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= dimension(); ++d) out.push_back(faces(d).size());
    return out;
}

SimplicialComplex SimplicialComplex::induced(std::span<const int> keep) const {
    std::vector<int> index(labels_.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        labels.push_back(labels_[static_cast<std::size_t>(keep[i])]);
    }
    std::vector<std::vector<int>> faces;
    for (const auto& facet : facets_) {
        std::vector<int> f;
        for (int v : facet)
            if (index[static_cast<std::size_t>(v)] >= 0) f.push_back(index[static_cast<std::size_t>(v)]);
        if (!f.empty()) faces.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(labels), std::move(faces));
}

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations)
    : labels_(std::move(labels)) {
    const int n = size();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("relation refers to an unknown element");
        if (a == b) throw std::invalid_argument("strict relation a < a is a cycle");
        out[a].push_back(b);
    }
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (auto& list : out) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (int b : list) ++indegree[b];
    }
    std::vector<int> topo;
    topo.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) topo.push_back(v);
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (int b : out[topo[i]])
            if (--indegree[b] == 0) topo.push_back(b);
    if (static_cast<int>(topo.size()) != n) throw std::invalid_argument("order relation contains a cycle");

    up_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    down_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        up_[v].set(static_cast<std::size_t>(v));
        for (int b : out[v]) up_[v] |= up_[b];
    }

    upper_.assign(static_cast<std::size_t>(n), {});
    lower_.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
        for (int b : out[a]) {
            bool redundant = false;
            for (int z : out[a])
                if (z != b && up_[z].test(static_cast<std::size_t>(b))) {
                    redundant = true;
                    break;
                }
            if (!redundant) {
                upper_[a].push_back(b);
                lower_[b].push_back(a);
            }
        }
    }
    for (auto& l : lower_) std::sort(l.begin(), l.end());

    level_.assign(static_cast<std::size_t>(n), 0);
    for (int v : topo) {
        down_[v].set(static_cast<std::size_t>(v));
        for (int a : lower_[v]) {
            down_[v] |= down_[a];
            level_[v] = std::max(level_[v], level_[a] + 1);
        }
    }
}

std::vector<std::pair<int, int>> Poset::hasse() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b : upper_[static_cast<std::size_t>(a)]) out.emplace_back(a, b);
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int e = 0; e < size(); ++e)
        if (lower_[static_cast<std::size_t>(e)].empty()) out.push_back(e);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int e = 0; e < size(); ++e)
        if (upper_[static_cast<std::size_t>(e)].empty()) out.push_back(e);
    return out;
}

Poset Poset::induced(std::span<const int> keep) const {
    std::vector<std::string> labels;
    for (int e : keep) labels.push_back(label(e));
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (i != j && less(keep[i], keep[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Poset(std::move(labels), rel);
}

void validate_z2(const Z2Poset& p) {
    const auto& t = p.involution;
    if (static_cast<int>(t.size()) != p.poset.size()) throw std::invalid_argument("involution is not total");
    for (int e = 0; e < p.poset.size(); ++e) {
        if (t[e] < 0 || t[e] >= p.poset.size()) throw std::invalid_argument("involution leaves the poset");
        if (t[t[e]] != e) throw std::invalid_argument("map is not an involution");
    }
    for (auto [a, b] : p.poset.hasse())
        if (!p.poset.leq(t[a], t[b])) throw std::invalid_argument("involution does not preserve the order");
}

void validate_z2(const Z2Complex& k) {
    const auto& t = k.involution;
    const int n = k.complex.vertex_count();
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument("involution is not total");
    for (int v = 0; v < n; ++v) {
        if (t[v] < 0 || t[v] >= n) throw std::invalid_argument("involution leaves the complex");
        if (t[t[v]] != v) throw std::invalid_argument("map is not an involution");
    }
    std::set<std::vector<int>> facets(k.complex.facets().begin(), k.complex.facets().end());
    for (const auto& f : k.complex.facets()) {
        std::vector<int> img;
        for (int v : f) img.push_back(t[v]);
        std::sort(img.begin(), img.end());
        if (!facets.count(img)) throw std::invalid_argument("involution does not map facets to facets");
    }
}

// ---------------------------------------------------------------------------
// Graph complexes

namespace {

struct PairHash {
    std::size_t operator()(const SetPair& p) const {
        return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x632be59bd9b4e019ULL));
    }
};

using PairIndex = std::unordered_map<SetPair, int, PairHash>;

void require_small(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("complex constructions support at most 64 vertices");
}

// Calls fn(tau, cn) for every nonempty tau ⊆ allowed with cn = CN(tau) ≠ ∅.
template <typename Fn>
void for_each_tau(const Graph& g, VertexSet allowed, Fn&& fn) {
    std::vector<VertexSet> nbr(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) nbr[v] = g.neighbor_mask(v);
    std::function<void(int, VertexSet, VertexSet)> rec = [&](int next, VertexSet tau, VertexSet cn) {
        for (int v = next; v < g.order(); ++v) {
            if (!(allowed & singleton(v))) continue;
            VertexSet cn2 = cn & nbr[v];
            if (!cn2) continue;
            VertexSet tau2 = tau | singleton(v);
            fn(tau2, cn2);
            rec(v + 1, tau2, cn2);
        }
    };
    rec(0, 0, g.common_neighbors(0));
}

// Sorts payloads by total size then lexicographically and builds the cover
// relation "add one vertex to one side".
struct PairPoset {
    std::vector<SetPair> pairs;
    PairIndex index;
    std::vector<std::pair<int, int>> covers;
};

PairPoset build_pair_poset(const Graph& g, std::vector<SetPair> pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const SetPair& a, const SetPair& b) {
        int sa = set_size(a.first) + set_size(a.second), sb = set_size(b.first) + set_size(b.second);
        if (sa != sb) return sa < sb;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    PairPoset out;
    out.pairs = std::move(pairs);
    out.index.reserve(out.pairs.size() * 2);
    for (std::size_t i = 0; i < out.pairs.size(); ++i) out.index.emplace(out.pairs[i], static_cast<int>(i));
    for (std::size_t i = 0; i < out.pairs.size(); ++i) {
        const SetPair p = out.pairs[i];
        auto add_side = [&](VertexSet grow, bool first_side) {
            for_each_member(grow, [&](int v) {
                SetPair q = first_side ? SetPair{p.first | singleton(v), p.second} : SetPair{p.first, p.second | singleton(v)};
                auto it = out.index.find(q);
                if (it != out.index.end()) out.covers.emplace_back(static_cast<int>(i), it->second);
            });
        };
        add_side(g.common_neighbors(p.second) & ~p.first, true);
        add_side(g.common_neighbors(p.first) & ~p.second, false);
    }
    return out;
}

std::vector<int> non_isolated(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) out.push_back(v);
    return out;
}

std::vector<int> rank_of(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> rank(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) rank[keep[i]] = static_cast<int>(i);
    return rank;
}

VertexSet color_class(const ColoredGraph& x, int color) {
    VertexSet s = 0;
    for (int v = 0; v < x.graph.order(); ++v)
        if (x.coloring[v] == color) s |= singleton(v);
    return s;
}

}  // namespace

std::string set_label(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](int v) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    });
    return out + "}";
}

int BoxComplex::find(SetPair p) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i] == p) return static_cast<int>(i);
    return -1;
}

int B0Complex::find(SetPair p) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i] == p) return static_cast<int>(i);
    return -1;
}

SimplicialComplex neighborhood_complex(const Graph& g) {
    auto keep = non_isolated(g);
    auto rank = rank_of(g, keep);
    std::vector<std::string> labels;
    for (int v : keep) labels.push_back(g.label(v));
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> f;
        for (int w : g.neighbors(v)) f.push_back(rank[w]);
        if (!f.empty()) faces.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(labels), std::move(faces));
}

SimplicialComplex colored_neighborhood_complex(const ColoredGraph& x, int color) {
    if (color != 1 && color != 2) throw std::invalid_argument("color must be 1 or 2");
    validate_colored(x);
    auto keep = non_isolated(x.graph);
    std::vector<int> in_class;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (x.coloring[keep[i]] == color) in_class.push_back(static_cast<int>(i));
    return neighborhood_complex(x.graph).induced(in_class);
}

BoxComplex box_complex(const Graph& g) {
    require_small(g);
    std::vector<SetPair> pairs;
    for_each_tau(g, g.common_neighbors(0), [&](VertexSet tau, VertexSet cn) {
        for (VertexSet s = cn; s; s = (s - 1) & cn) pairs.push_back({s, tau});
    });
    PairPoset pp = build_pair_poset(g, std::move(pairs));
    BoxComplex out;
    std::vector<std::string> labels;
    for (const auto& p : pp.pairs) labels.push_back("(" + set_label(g, p.first) + "," + set_label(g, p.second) + ")");
    out.z2.poset = Poset(std::move(labels), pp.covers);
    out.z2.involution.resize(pp.pairs.size());
    for (std::size_t i = 0; i < pp.pairs.size(); ++i)
        out.z2.involution[i] = pp.index.at({pp.pairs[i].second, pp.pairs[i].first});
    out.pairs = std::move(pp.pairs);
    return out;
}

B0Complex b0_complex(const ColoredGraph& x) {
    validate_colored(x);
    require_small(x.graph);
    const VertexSet side_two = color_class(x, 2);
    std::vector<SetPair> pairs;
    for_each_tau(x.graph, side_two, [&](VertexSet tau, VertexSet cn) {
        for (VertexSet s = cn; s; s = (s - 1) & cn) pairs.push_back({s, tau});
    });
    PairPoset pp = build_pair_poset(x.graph, std::move(pairs));
    B0Complex out;
    std::vector<std::string> labels;
    for (const auto& p : pp.pairs)
        labels.push_back("{" + set_label(x.graph, p.first) + "," + set_label(x.graph, p.second) + "}");
    out.poset = Poset(std::move(labels), pp.covers);
    out.pairs = std::move(pp.pairs);
    out.coloring = x.coloring;
    return out;
}

B0Complex b0_complex(const Graph& x) {
    auto coloring = two_coloring(x);
    if (!coloring) throw std::invalid_argument("B0 requires a bipartite graph");
    return b0_complex(ColoredGraph{x, std::move(*coloring)});
}

Z2Poset b0_z2(const B0Complex& b0, const Graph& x, std::span<const int> t) {
    validate_involution(x, t);
    PairIndex index;
    for (std::size_t i = 0; i < b0.pairs.size(); ++i) index.emplace(b0.pairs[i], static_cast<int>(i));
    auto image = [&](VertexSet s) {
        VertexSet out = 0;
        for_each_member(s, [&](int v) { out |= singleton(t[v]); });
        return out;
    };
    Z2Poset out{b0.poset, std::vector<int>(b0.pairs.size())};
    for (std::size_t i = 0; i < b0.pairs.size(); ++i) {
        VertexSet a = image(b0.pairs[i].first), b = image(b0.pairs[i].second);
        int lead = std::countr_zero(a);
        SetPair q = b0.coloring[lead] == 1 ? SetPair{a, b} : SetPair{b, a};
        auto it = index.find(q);
        if (it == index.end()) throw std::invalid_argument("involution does not act on B0");
        out.involution[i] = it->second;
    }
    validate_z2(out);
    return out;
}

PhiIso phi_iso(const Graph& g) {
    if (g.order() > 32) throw std::invalid_argument("phi_iso supports at most 32 vertices");
    PhiIso out{box_complex(g), kronecker_cover(g), {}, {}, {}};
    out.b0 = b0_complex(out.cover.cover);
    const int n = g.order();
    const VertexSet low = n == 0 ? 0 : (n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1);
    out.phi.assign(out.box.pairs.size(), -1);
    out.psi.assign(out.b0.pairs.size(), -1);
    for (std::size_t i = 0; i < out.box.pairs.size(); ++i) {
        const auto& p = out.box.pairs[i];
        out.phi[i] = out.b0.find({p.first, p.second << n});
    }
    for (std::size_t i = 0; i < out.b0.pairs.size(); ++i) {
        const auto& p = out.b0.pairs[i];
        out.psi[i] = out.box.find({p.first & low, (p.second >> n) & low});
    }
    return out;
}

bool verify_phi_iso(const PhiIso& iso) {
    const auto& box = iso.box.z2.poset;
    const auto& b0 = iso.b0.poset;
    if (box.size() != b0.size()) return false;
    for (int i = 0; i < box.size(); ++i) {
        if (iso.phi[i] < 0 || iso.psi[iso.phi[i]] != i) return false;
    }
    for (int j = 0; j < b0.size(); ++j) {
        if (iso.psi[j] < 0 || iso.phi[iso.psi[j]] != j) return false;
    }
    for (int a = 0; a < box.size(); ++a)
        for (int b = 0; b < box.size(); ++b)
            if (box.leq(a, b) != b0.leq(iso.phi[a], iso.phi[b])) return false;
    Z2Poset b0z2 = b0_z2(iso.b0, iso.cover.cover.graph, iso.cover.involution);
    for (int a = 0; a < box.size(); ++a)
        if (iso.phi[iso.box.z2.involution[a]] != b0z2.involution[iso.phi[a]]) return false;
    return true;
}

Poset face_poset(const SimplicialComplex& k) {
    std::set<std::vector<int>> all;
    for (const auto& facet : k.facets()) {
        const std::size_t m = facet.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<int> f;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1U) f.push_back(facet[i]);
            all.insert(std::move(f));
        }
    }
    std::vector<std::vector<int>> faces(all.begin(), all.end());
    std::stable_sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        index.emplace(faces[i], static_cast<int>(i));
        std::string l = "{";
        for (std::size_t j = 0; j < faces[i].size(); ++j) {
            if (j) l += ",";
            l += k.labels()[static_cast<std::size_t>(faces[i][j])];
        }
        labels.push_back(l + "}");
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].size() < 2) continue;
        for (std::size_t drop = 0; drop < faces[i].size(); ++drop) {
            std::vector<int> sub = faces[i];
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            covers.emplace_back(index.at(sub), static_cast<int>(i));
        }
    }
    return Poset(std::move(labels), covers);
}

SimplicialComplex order_complex(const Poset& p, std::size_t max_facets) {
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    std::function<void(int)> climb = [&](int e) {
        chain.push_back(e);
        auto up = p.upper_covers(e);
        if (up.empty()) {
            if (chains.size() >= max_facets) throw std::length_error("order complex exceeds the facet bound");
            chains.push_back(chain);
        }
        for (int u : up) climb(u);
        chain.pop_back();
    };
    for (int m : p.minimal_elements()) climb(m);
    return SimplicialComplex::from_facets(p.labels(), std::move(chains));
}

Z2Complex bprime_complex(const Graph& g) {
    require_small(g);
    if (g.has_any_loop()) throw std::invalid_argument("B' requires a loopless graph");
    auto keep = non_isolated(g);
    auto rank = rank_of(g, keep);
    std::vector<std::string> labels;
    for (int v : keep) {
        labels.push_back("(" + g.label(v) + ",0)");
        labels.push_back("(" + g.label(v) + ",1)");
    }
    std::set<std::pair<VertexSet, VertexSet>> closed;
    for_each_tau(g, g.common_neighbors(0), [&](VertexSet, VertexSet cn) {
        closed.insert({cn, g.common_neighbors(cn)});
    });
    std::vector<std::vector<int>> facets;
    for (auto [s, t] : closed) {
        std::vector<int> f;
        for_each_member(s, [&](int v) { f.push_back(2 * rank[v]); });
        for_each_member(t, [&](int v) { f.push_back(2 * rank[v] + 1); });
        facets.push_back(std::move(f));
    }
    Z2Complex out{SimplicialComplex::from_facets(std::move(labels), std::move(facets)), {}};
    out.involution.resize(2 * keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.involution[2 * i] = static_cast<int>(2 * i + 1);
        out.involution[2 * i + 1] = static_cast<int>(2 * i);
    }
    return out;
}

SimplicialComplex bprime0_complex(const ColoredGraph& x) {
    validate_colored(x);
    require_small(x.graph);
    auto keep = non_isolated(x.graph);
    auto rank = rank_of(x.graph, keep);
    std::vector<std::string> labels;
    for (int v : keep) labels.push_back(x.graph.label(v));
    std::set<std::pair<VertexSet, VertexSet>> closed;
    for_each_tau(x.graph, color_class(x, 2), [&](VertexSet, VertexSet cn) {
        closed.insert({cn, x.graph.common_neighbors(cn)});
    });
    std::vector<std::vector<int>> facets;
    for (auto [s, t] : closed) {
        std::vector<int> f;
        for_each_member(s | t, [&](int v) { f.push_back(rank[v]); });
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

Z2Complex bprime0_z2(const ColoredGraph& x, std::span<const int> t) {
    validate_involution(x.graph, t);
    auto keep = non_isolated(x.graph);
    auto rank = rank_of(x.graph, keep);
    Z2Complex out{bprime0_complex(x), std::vector<int>(keep.size())};
    for (std::size_t i = 0; i < keep.size(); ++i) out.involution[i] = rank[t[keep[i]]];
    validate_z2(out);
    return out;
}

}  // namespace boxcx
