#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace boxcx::detail {

/// A finite set of nodes with vertex labels and typed directed arcs. Every
/// isomorphism question in the library (graphs, posets, Z2-posets, complexes)
/// is phrased as an isomorphism of two such structures.
struct Structure {
    explicit Structure(int n = 0) : labels(static_cast<std::size_t>(n), 0), arcs(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(labels.size()); }
    void add_arc(int from, int to, std::uint32_t type) {
        arcs[static_cast<std::size_t>(from)].push_back({type, to});
    }

    struct Arc {
        std::uint32_t type;
        int to;
    };

    std::vector<std::uint64_t> labels;
    std::vector<std::vector<Arc>> arcs;
};

struct SearchStats {
    std::size_t nodes = 0;
    std::size_t leaves = 0;
};

/// Label- and arc-preserving bijection a -> b, or nullopt. Deterministic:
/// branching always individualizes the least node of the smallest
/// non-singleton cell and tries candidates in increasing order.
std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b,
                                                 SearchStats* stats = nullptr);

/// Direct check that f preserves labels and the typed arc multiset.
bool preserves_structure(const Structure& a, const Structure& b, const std::vector<int>& f);

}  // namespace boxcx::detail
