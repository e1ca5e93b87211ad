#include "boxcx/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "boxcx/detail/refine.hpp"

namespace boxcx {

namespace {

std::vector<std::string> numbered(int n, int first) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(first + i));
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph::Graph(int n) : Graph(numbered(n, 0)) {}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)), adj_(labels_.size()) {}

void Graph::add_edge(int u, int v) {
    require(u >= 0 && v >= 0 && u < order() && v < order(), "edge endpoint out of range");
    auto insert = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert(adj_[u], v);
    insert(adj_[v], u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::has_any_loop() const {
    for (int v = 0; v < order(); ++v)
        if (has_loop(v)) return true;
    return false;
}

VertexSet Graph::neighbor_mask(int v) const {
    require(order() <= 64, "vertex-set operations support at most 64 vertices");
    VertexSet m = 0;
    for (int w : adj_[v]) m |= singleton(w);
    return m;
}

VertexSet Graph::common_neighbors(VertexSet s) const {
    require(order() <= 64, "vertex-set operations support at most 64 vertices");
    VertexSet all = order() == 64 ? ~VertexSet{0} : (VertexSet{1} << order()) - 1;
    for_each_member(s, [&](int v) { all &= neighbor_mask(v); });
    return all;
}

std::optional<int> Graph::find_label(const std::string& l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (int v = 0; v < order(); ++v)
        for (int w : adj_[v])
            if (w >= v) ++total;
    return total;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < order(); ++v)
        for (int w : adj_[v])
            if (w >= v) out.emplace_back(v, w);
    return out;
}

void check_vertex_map(const Graph& source, const Graph& target, std::span<const int> f) {
    if (static_cast<int>(f.size()) != source.order())
        throw std::invalid_argument("vertex map is not total on the source graph");
    for (int x : f)
        if (x < 0 || x >= target.order()) throw std::invalid_argument("vertex map leaves the target graph");
}

bool is_homomorphism(const Graph& source, const Graph& target, std::span<const int> f) {
    check_vertex_map(source, target, f);
    for (auto [u, v] : source.edges())
        if (!target.has_edge(f[u], f[v])) return false;
    return true;
}

Graph tensor_product(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < h.order(); ++j) labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
    Graph out(std::move(labels));
    const int m = h.order();
    for (int x = 0; x < g.order(); ++x)
        for (int x2 : g.neighbors(x))
            for (int y = 0; y < m; ++y)
                for (int y2 : h.neighbors(y)) out.add_edge(x * m + y, x2 * m + y2);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    bool clash = false;
    for (const auto& l : h.labels())
        if (g.find_label(l)) clash = true;
    for (const auto& l : g.labels()) labels.push_back(clash ? "(0," + l + ")" : l);
    for (const auto& l : h.labels()) labels.push_back(clash ? "(1," + l + ")" : l);
    Graph out(std::move(labels));
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index[keep[i]] = static_cast<int>(i);
        labels.push_back(g.label(keep[i]));
    }
    Graph out(std::move(labels));
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) out.add_edge(index[u], index[v]);
    return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    require(static_cast<int>(perm.size()) == g.order(), "permutation size mismatch");
    std::vector<std::string> labels(static_cast<std::size_t>(g.order()));
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) {
        require(perm[v] >= 0 && perm[v] < g.order() && !seen[perm[v]], "not a permutation");
        seen[perm[v]] = 1;
        labels[perm[v]] = g.label(v);
    }
    Graph out(std::move(labels));
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph strip_isolated(const Graph& g, std::vector<int>* kept) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    if (kept) *kept = keep;
    return induced_subgraph(g, keep);
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

Graph complete_graph(int n) {
    require(n >= 1, "complete_graph requires n >= 1");
    Graph g(numbered(n, 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    require(n >= 1, "path requires n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph interval_graph(int n) {
    require(n >= 0, "interval_graph requires n >= 0");
    Graph g(n + 1);
    for (int i = 0; i <= n; ++i) {
        g.add_edge(i, i);
        if (i < n) g.add_edge(i, i + 1);
    }
    return g;
}

Graph complete_bipartite(int p, int q) {
    require(p >= 1 && q >= 1, "complete_bipartite requires p, q >= 1");
    Graph g(p + q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
    return g;
}

Graph edgeless_graph(int n) {
    require(n >= 0, "edgeless_graph requires n >= 0");
    return Graph(n);
}

Graph looped_vertex() {
    Graph g(1);
    g.add_edge(0, 0);
    return g;
}

Graph generalized_petersen(int n, int k) {
    require(n >= 3 && k >= 1 && 2 * k < n, "generalized_petersen requires n >= 3 and 1 <= k < n/2");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

Graph petersen() { return generalized_petersen(5, 2); }
Graph desargues() { return generalized_petersen(10, 3); }

namespace {

// DSATUR branch and bound. Colors are 0-based internally.
class ExactColoring {
public:
    explicit ExactColoring(const Graph& g)
        : g_(g), n_(g.order()), color_(static_cast<std::size_t>(n_), -1),
          seen_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_) + 1, 0)),
          sat_(static_cast<std::size_t>(n_), 0) {}

    int solve() {
        if (n_ == 0) return 0;
        lower_ = greedy_clique();
        best_ = dsatur_greedy();
        if (best_ > lower_) branch(0, 0);
        return best_;
    }

private:
    int pick() const {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        color_[v] = c;
        for (int w : g_.neighbors(v))
            if (seen_[w][c]++ == 0) ++sat_[w];
    }

    void unassign(int v) {
        int c = color_[v];
        for (int w : g_.neighbors(v))
            if (--seen_[w][c] == 0) --sat_[w];
        color_[v] = -1;
    }

    int dsatur_greedy() {
        int used = 0;
        std::vector<int> order;
        for (int i = 0; i < n_; ++i) {
            int v = pick();
            int c = 0;
            while (seen_[v][c] > 0) ++c;
            assign(v, c);
            order.push_back(v);
            used = std::max(used, c + 1);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) unassign(*it);
        return used;
    }

    int greedy_clique() const {
        int best = 1;
        for (int s = 0; s < n_; ++s) {
            std::vector<int> clique{s};
            for (int v = 0; v < n_; ++v) {
                if (v == s) continue;
                bool ok = std::all_of(clique.begin(), clique.end(), [&](int u) { return g_.has_edge(u, v); });
                if (ok) clique.push_back(v);
            }
            best = std::max(best, static_cast<int>(clique.size()));
        }
        return best;
    }

    void branch(int colored, int used) {
        if (used >= best_ || best_ == lower_) return;
        if (colored == n_) {
            best_ = used;
            return;
        }
        int v = pick();
        for (int c = 0; c < used; ++c) {
            if (seen_[v][c] > 0) continue;
            assign(v, c);
            branch(colored + 1, used);
            unassign(v);
            if (best_ == lower_) return;
        }
        if (used + 1 < best_) {
            assign(v, used);
            branch(colored + 1, used + 1);
            unassign(v);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> sat_;
    int best_ = 0;
    int lower_ = 0;
};

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.has_any_loop()) return kInfinity;
    return ExactColoring(g).solve();
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s]) continue;
        color[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] == 0) {
                    color[w] = 3 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

bool is_graph_isomorphism(const Graph& g, const Graph& h, std::span<const int> f) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    check_vertex_map(g, h, f);
    std::vector<char> hit(static_cast<std::size_t>(h.order()), 0);
    for (int x : f) {
        if (hit[x]) return false;
        hit[x] = 1;
    }
    // Injective, edge-preserving and edge counts agree, so edges biject.
    return is_homomorphism(g, h, f);
}

namespace {

detail::Structure graph_structure(const Graph& g) {
    detail::Structure s(g.order());
    for (int v = 0; v < g.order(); ++v) {
        s.labels[v] = g.has_loop(v) ? 1 : 0;
        for (int w : g.neighbors(v))
            if (w != v) s.add_arc(v, w, 0);
    }
    return s;
}

}  // namespace

std::optional<VertexMap> graph_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto found = detail::find_isomorphism(graph_structure(g), graph_structure(h));
    if (!found) return std::nullopt;
    if (!is_graph_isomorphism(g, h, *found)) throw std::logic_error("graph isomorphism witness failed verification");
    return found;
}

bool is_stiff(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        auto nv = g.neighbors(v);
        for (int w = 0; w < g.order(); ++w) {
            if (w == v) continue;
            auto nw = g.neighbors(w);
            if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end())) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

int girth(const Graph& g) {
    if (g.has_any_loop()) return 1;
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1), parent(static_cast<std::size_t>(g.order()), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace boxcx
