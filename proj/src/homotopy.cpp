#include "boxcx/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "boxcx/covering.hpp"
#include "boxcx/iso.hpp"

namespace boxcx {

namespace {

// All faces of one dimension, row-major with `width` vertices per row,
// rows sorted lexicographically and distinct.
struct FaceTable {
    std::size_t width = 0;
    std::vector<int> data;

    std::size_t rows() const { return width ? data.size() / width : 0; }
    std::span<const int> row(std::size_t i) const { return {data.data() + i * width, width}; }

    std::size_t find(std::span<const int> face) const {
        std::size_t lo = 0, hi = rows();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            auto r = row(mid);
            if (std::lexicographical_compare(r.begin(), r.end(), face.begin(), face.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
};

FaceTable face_table(const SimplicialComplex& k, std::size_t width) {
    FaceTable raw{width, {}};
    std::vector<std::size_t> pick(width);
    for (const auto& facet : k.facets()) {
        const std::size_t m = facet.size();
        if (m < width) continue;
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            for (std::size_t i : pick) raw.data.push_back(facet[i]);
            std::size_t i = width;
            while (i > 0 && pick[i - 1] == m - width + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < width; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::vector<std::size_t> order(raw.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto less = [&](std::size_t a, std::size_t b) {
        auto ra = raw.row(a), rb = raw.row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(order.begin(), order.end(), less);
    FaceTable out{width, {}};
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        if (idx > 0 && !less(order[idx - 1], order[idx])) continue;
        auto r = raw.row(order[idx]);
        out.data.insert(out.data.end(), r.begin(), r.end());
    }
    return out;
}

void xor_into(std::vector<int>& col, const std::vector<int>& other, std::vector<int>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
    col.swap(scratch);
}

}  // namespace

BettiVector betti_gf2(const SimplicialComplex& k) {
    const int top = k.dimension();
    if (top < 0) return {};
    std::vector<FaceTable> faces;
    for (int d = 0; d <= top; ++d) faces.push_back(face_table(k, static_cast<std::size_t>(d) + 1));

    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<char> cleared;  // faces of dimension d that are pivots of ∂_{d+1}
    std::vector<int> face, scratch;
    for (int d = top; d >= 1; --d) {
        const FaceTable& cells = faces[static_cast<std::size_t>(d)];
        const FaceTable& rows = faces[static_cast<std::size_t>(d) - 1];
        std::vector<int> pivot_col(rows.rows(), -1);
        std::vector<std::vector<int>> reduced(cells.rows());
        for (std::size_t j = 0; j < cells.rows(); ++j) {
            if (!cleared.empty() && cleared[j]) continue;
            auto cell = cells.row(j);
            std::vector<int> col;
            for (std::size_t drop = 0; drop < cell.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != drop) face.push_back(cell[i]);
                col.push_back(static_cast<int>(rows.find(face)));
            }
            std::sort(col.begin(), col.end());
            while (!col.empty() && pivot_col[static_cast<std::size_t>(col.back())] >= 0)
                xor_into(col, reduced[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(col.back())])], scratch);
            if (!col.empty()) {
                pivot_col[static_cast<std::size_t>(col.back())] = static_cast<int>(j);
                reduced[j] = std::move(col);
                ++rank[static_cast<std::size_t>(d)];
            }
        }
        cleared.assign(rows.rows(), 0);
        for (std::size_t r = 0; r < rows.rows(); ++r)
            if (pivot_col[r] >= 0) cleared[r] = 1;
    }

    BettiVector out;
    for (int d = 0; d <= top; ++d) {
        auto n = faces[static_cast<std::size_t>(d)].rows();
        out.push_back(static_cast<int>(n - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d) + 1]));
    }
    return out;
}

int complex_connected(const SimplicialComplex& k) {
    std::vector<int> parent(static_cast<std::size_t>(k.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    int components = k.vertex_count();
    for (const auto& f : k.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            int a = root(f[0]), b = root(f[i]);
            if (a != b) {
                parent[b] = a;
                --components;
            }
        }
    return components;
}

namespace {

void check_bounds(const Graph& g, const Graph& h, const HomBounds& bounds) {
    if (g.order() > bounds.max_vertices || h.order() > bounds.max_vertices)
        throw std::invalid_argument("graph exceeds the homomorphism enumeration bound");
}

// Backtracking over maps whose value at v is restricted to allowed[v] and
// which are homomorphisms; fn returns false to stop.
void for_each_hom(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& allowed,
                  const std::function<bool(const VertexMap&)>& fn) {
    VertexMap f(static_cast<std::size_t>(g.order()), -1);
    bool stop = false;
    std::function<void(int)> rec = [&](int v) {
        if (stop) return;
        if (v == g.order()) {
            if (!fn(f)) stop = true;
            return;
        }
        for (int c : allowed[v]) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                int fu = u == v ? c : f[u];
                if (fu >= 0 && !h.has_edge(c, fu)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            f[v] = c;
            rec(v + 1);
            f[v] = -1;
            if (stop) return;
        }
    };
    rec(0);
}

std::vector<VertexMap> homotopy_neighbors(const Graph& g, const Graph& h, const VertexMap& f) {
    std::vector<std::vector<int>> allowed(static_cast<std::size_t>(g.order()));
    for (int y = 0; y < g.order(); ++y) {
        for (int c = 0; c < h.order(); ++c) {
            bool ok = true;
            for (int x : g.neighbors(y))
                if (!h.has_edge(f[x], c)) {
                    ok = false;
                    break;
                }
            if (ok) allowed[y].push_back(c);
        }
    }
    std::vector<VertexMap> out;
    for_each_hom(g, h, allowed, [&](const VertexMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// States reachable from f in the homotopy graph, stopping early at `goal`.
std::set<VertexMap> homotopy_component(const Graph& g, const Graph& h, const VertexMap& f, const HomBounds& bounds,
                                       const VertexMap* goal) {
    std::set<VertexMap> seen{f};
    std::deque<VertexMap> queue{f};
    while (!queue.empty()) {
        VertexMap cur = std::move(queue.front());
        queue.pop_front();
        if (goal && cur == *goal) break;
        for (auto& next : homotopy_neighbors(g, h, cur)) {
            if (seen.insert(next).second) {
                if (seen.size() > bounds.max_states) throw std::length_error("homotopy search exceeds the state bound");
                if (goal && next == *goal) return seen;
                queue.push_back(std::move(next));
            }
        }
    }
    return seen;
}

VertexMap compose(std::span<const int> outer, std::span<const int> inner) {
    VertexMap out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

VertexMap identity_map(int n) {
    VertexMap id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

}  // namespace

std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h, const HomBounds& bounds) {
    check_bounds(g, h, bounds);
    std::vector<int> every(static_cast<std::size_t>(h.order()));
    std::iota(every.begin(), every.end(), 0);
    std::vector<std::vector<int>> allowed(static_cast<std::size_t>(g.order()), every);
    std::vector<VertexMap> out;
    for_each_hom(g, h, allowed, [&](const VertexMap& f) {
        if (out.size() >= bounds.max_maps) throw std::length_error("homomorphism count exceeds the bound");
        out.push_back(f);
        return true;
    });
    return out;
}

bool one_step_homotopic(const Graph& g, const Graph& h, std::span<const int> f, std::span<const int> f2) {
    check_vertex_map(g, h, f);
    check_vertex_map(g, h, f2);
    for (int x = 0; x < g.order(); ++x)
        for (int y : g.neighbors(x))
            if (!h.has_edge(f[x], f2[y])) return false;
    return true;
}

bool x_homotopic(const Graph& g, const Graph& h, std::span<const int> f, std::span<const int> f2,
                 const HomBounds& bounds) {
    if (!is_homomorphism(g, h, f) || !is_homomorphism(g, h, f2))
        throw std::invalid_argument("x_homotopic needs homomorphisms");
    VertexMap start(f.begin(), f.end()), goal(f2.begin(), f2.end());
    if (start == goal) return true;
    auto seen = homotopy_component(g, h, start, bounds, &goal);
    return seen.count(goal) > 0;
}

std::optional<std::pair<VertexMap, VertexMap>> x_homotopy_equivalent(const Graph& g, const Graph& h,
                                                                     const HomBounds& bounds) {
    if (auto iso = graph_isomorphic(g, h)) {
        VertexMap inv(iso->size());
        for (std::size_t i = 0; i < iso->size(); ++i) inv[static_cast<std::size_t>((*iso)[i])] = static_cast<int>(i);
        return std::make_pair(*iso, inv);
    }
    auto forth = enumerate_homomorphisms(g, h, bounds);
    if (forth.empty()) return std::nullopt;
    auto back = enumerate_homomorphisms(h, g, bounds);
    if (back.empty()) return std::nullopt;
    auto comp_g = homotopy_component(g, g, identity_map(g.order()), bounds, nullptr);
    auto comp_h = homotopy_component(h, h, identity_map(h.order()), bounds, nullptr);
    for (const auto& f : forth)
        for (const auto& b : back)
            if (comp_g.count(compose(b, f)) && comp_h.count(compose(f, b))) return std::make_pair(f, b);
    return std::nullopt;
}

CoverHomotopyWitness prop410_witness(std::span<const int> iso, const Graph& g, const Graph& h) {
    if (has_isolated_vertex(g) || has_isolated_vertex(h))
        throw std::invalid_argument("prop410_witness requires graphs without isolated vertices");
    // Without isolated vertices, complex vertex i is graph vertex i.
    if (!is_complex_isomorphism(neighborhood_complex(g), neighborhood_complex(h), iso))
        throw std::invalid_argument("map is not an isomorphism of neighborhood complexes");
    const int n = g.order(), m = h.order();
    VertexMap inv(static_cast<std::size_t>(m));
    for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(iso[static_cast<std::size_t>(x)])] = x;

    auto image_inside = [](const Graph& src, int x, std::span<const int> map, const Graph& dst, int y) {
        for (int w : src.neighbors(x))
            if (!dst.has_edge(y, map[static_cast<std::size_t>(w)])) return false;
        return true;
    };
    CoverHomotopyWitness w;
    w.g_choice.assign(static_cast<std::size_t>(n), -1);
    w.h_choice.assign(static_cast<std::size_t>(m), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < m && w.g_choice[x] < 0; ++y)
            if (image_inside(g, x, iso, h, y)) w.g_choice[x] = y;
        if (w.g_choice[x] < 0) throw std::invalid_argument("no vertex of H has a neighborhood containing f(N(x))");
    }
    for (int y = 0; y < m; ++y) {
        for (int x = 0; x < n && w.h_choice[y] < 0; ++x)
            if (image_inside(h, y, inv, g, x)) w.h_choice[y] = x;
        if (w.h_choice[y] < 0) throw std::invalid_argument("no vertex of G has a neighborhood containing f^-1(N(y))");
    }

    w.f_map.resize(static_cast<std::size_t>(2 * n));
    w.f_back.resize(static_cast<std::size_t>(2 * m));
    for (int x = 0; x < n; ++x) {
        w.f_map[x] = iso[static_cast<std::size_t>(x)];
        w.f_map[n + x] = m + w.g_choice[x];
    }
    for (int y = 0; y < m; ++y) {
        w.f_back[y] = inv[y];
        w.f_back[m + y] = n + w.h_choice[y];
    }

    Graph cg = kronecker_cover(g).cover.graph;
    Graph ch = kronecker_cover(h).cover.graph;
    if (!is_homomorphism(cg, ch, w.f_map) || !is_homomorphism(ch, cg, w.f_back))
        throw std::logic_error("cover maps built from the complex isomorphism are not homomorphisms");
    w.back_forth_one_step = one_step_homotopic(cg, cg, identity_map(2 * n), compose(w.f_back, w.f_map));
    w.forth_back_one_step = one_step_homotopic(ch, ch, identity_map(2 * m), compose(w.f_map, w.f_back));
    return w;
}

}  // namespace boxcx
