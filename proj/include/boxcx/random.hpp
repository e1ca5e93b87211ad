#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "boxcx/graph.hpp"

namespace boxcx {

/// Seeded source used by every randomized suite. Draws go through explicit
/// modular reduction so a seed gives the same sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    int uniform(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }
    /// True with probability percent/100.
    bool chance(int percent) { return static_cast<int>(engine_() % 100) < percent; }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform(0, i)]);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

struct RandomGraphSpec {
    int min_vertices = 1;
    int max_vertices = 6;
    int edge_percent = 45;
    int loop_percent = 0;
    /// Attach every isolated vertex to a random other vertex (or give it a
    /// loop when it is alone and loops are enabled).
    bool no_isolated = true;
};

inline Graph random_graph(Rng& rng, const RandomGraphSpec& spec) {
    const int n = rng.uniform(spec.min_vertices, spec.max_vertices);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        if (spec.loop_percent > 0 && rng.chance(spec.loop_percent)) g.add_edge(u, u);
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(spec.edge_percent)) g.add_edge(u, v);
    }
    if (spec.no_isolated) {
        for (int u = 0; u < n; ++u) {
            if (g.degree(u) > 0) continue;
            if (n == 1) {
                g.add_edge(u, u);
                continue;
            }
            int v = rng.uniform(0, n - 2);
            if (v >= u) ++v;
            g.add_edge(u, v);
        }
    }
    return g;
}

/// Random bipartite graph with sides of random sizes summing to at most
/// max_vertices.
inline Graph random_bipartite(Rng& rng, int min_vertices, int max_vertices, int edge_percent, bool no_isolated) {
    const int n = rng.uniform(std::max(2, min_vertices), max_vertices);
    const int left = rng.uniform(1, n - 1);
    Graph g(n);
    for (int u = 0; u < left; ++u)
        for (int v = left; v < n; ++v)
            if (rng.chance(edge_percent)) g.add_edge(u, v);
    if (no_isolated) {
        for (int u = 0; u < n; ++u) {
            if (g.degree(u) > 0) continue;
            int v = u < left ? rng.uniform(left, n - 1) : rng.uniform(0, left - 1);
            g.add_edge(u, v);
        }
    }
    // Shuffle so the color classes are not contiguous.
    return relabel(g, rng.permutation(n));
}

}  // namespace boxcx
