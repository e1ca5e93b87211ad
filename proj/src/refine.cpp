#include "boxcx/detail/refine.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace boxcx::detail {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Both structures live side by side in one node range [0, na + nb); colors
// are shared, so a color means the same thing on either side.
class Matcher {
public:
    Matcher(const Structure& a, const Structure& b, SearchStats* stats)
        : a_(a), b_(b), na_(a.size()), n_(a.size() + b.size()), stats_(stats) {
        adj_.resize(static_cast<std::size_t>(n_));
        auto add = [&](const Structure& s, int offset) {
            for (int v = 0; v < s.size(); ++v) {
                for (const auto& arc : s.arcs[static_cast<std::size_t>(v)]) {
                    adj_[static_cast<std::size_t>(v + offset)].push_back({arc.type * 2, arc.to + offset});
                    adj_[static_cast<std::size_t>(arc.to + offset)].push_back({arc.type * 2 + 1, v + offset});
                }
            }
        };
        add(a, 0);
        add(b, na_);
    }

    std::optional<std::vector<int>> run() {
        if (a_.size() != b_.size()) return std::nullopt;
        std::size_t arcs_a = 0, arcs_b = 0;
        for (const auto& v : a_.arcs) arcs_a += v.size();
        for (const auto& v : b_.arcs) arcs_b += v.size();
        if (arcs_a != arcs_b) return std::nullopt;

        std::vector<std::uint64_t> init(static_cast<std::size_t>(n_));
        for (int v = 0; v < na_; ++v) init[static_cast<std::size_t>(v)] = a_.labels[static_cast<std::size_t>(v)];
        for (int v = 0; v < b_.size(); ++v) init[static_cast<std::size_t>(v + na_)] = b_.labels[static_cast<std::size_t>(v)];
        std::vector<std::uint32_t> colors(static_cast<std::size_t>(n_));
        std::uint32_t num = rank(init, colors);
        return search(std::move(colors), num);
    }

private:
    // Dense ranks of the keys, in key order.
    std::uint32_t rank(const std::vector<std::uint64_t>& keys, std::vector<std::uint32_t>& out) const {
        std::vector<int> idx(static_cast<std::size_t>(n_));
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int x, int y) {
            return keys[static_cast<std::size_t>(x)] < keys[static_cast<std::size_t>(y)];
        });
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && keys[static_cast<std::size_t>(idx[i])] != keys[static_cast<std::size_t>(idx[i - 1])]) ++c;
            out[static_cast<std::size_t>(idx[i])] = c;
        }
        return idx.empty() ? 0 : c + 1;
    }

    std::uint32_t refine(std::vector<std::uint32_t>& colors, std::uint32_t num) const {
        std::vector<std::pair<std::uint32_t, std::uint64_t>> key(static_cast<std::size_t>(n_));
        std::vector<int> idx(static_cast<std::size_t>(n_));
        while (true) {
            for (int v = 0; v < n_; ++v) {
                std::uint64_t h = 0;
                for (const auto& arc : adj_[static_cast<std::size_t>(v)])
                    h += mix((static_cast<std::uint64_t>(arc.type) << 32) ^ colors[static_cast<std::size_t>(arc.to)]);
                key[static_cast<std::size_t>(v)] = {colors[static_cast<std::size_t>(v)], h};
            }
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int x, int y) {
                return key[static_cast<std::size_t>(x)] < key[static_cast<std::size_t>(y)];
            });
            std::uint32_t c = 0;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i > 0 && key[static_cast<std::size_t>(idx[i])] != key[static_cast<std::size_t>(idx[i - 1])]) ++c;
                colors[static_cast<std::size_t>(idx[i])] = c;
            }
            std::uint32_t next = idx.empty() ? 0 : c + 1;
            if (next == num) return num;
            num = next;
        }
    }

    std::optional<std::vector<int>> search(std::vector<std::uint32_t> colors, std::uint32_t num) {
        if (stats_) ++stats_->nodes;
        num = refine(colors, num);

        std::vector<int> count_a(num, 0), count_b(num, 0);
        for (int v = 0; v < na_; ++v) ++count_a[colors[static_cast<std::size_t>(v)]];
        for (int v = na_; v < n_; ++v) ++count_b[colors[static_cast<std::size_t>(v)]];
        if (count_a != count_b) return std::nullopt;

        std::uint32_t cell = num;
        int best = 0;
        for (std::uint32_t c = 0; c < num; ++c) {
            if (count_a[c] > 1 && (cell == num || count_a[c] < best)) {
                cell = c;
                best = count_a[c];
            }
        }

        if (cell == num) {
            if (stats_) ++stats_->leaves;
            std::vector<int> of_color(num, -1);
            for (int v = na_; v < n_; ++v) of_color[colors[static_cast<std::size_t>(v)]] = v - na_;
            std::vector<int> f(static_cast<std::size_t>(na_));
            for (int v = 0; v < na_; ++v) f[static_cast<std::size_t>(v)] = of_color[colors[static_cast<std::size_t>(v)]];
            if (preserves_structure(a_, b_, f)) return f;
            return std::nullopt;
        }

        int pivot = -1;
        for (int v = 0; v < na_; ++v) {
            if (colors[static_cast<std::size_t>(v)] == cell) {
                pivot = v;
                break;
            }
        }
        for (int w = na_; w < n_; ++w) {
            if (colors[static_cast<std::size_t>(w)] != cell) continue;
            auto next = colors;
            next[static_cast<std::size_t>(pivot)] = num;
            next[static_cast<std::size_t>(w)] = num;
            if (auto found = search(std::move(next), num + 1)) return found;
        }
        return std::nullopt;
    }

    struct Arc {
        std::uint32_t type;
        int to;
    };

    const Structure& a_;
    const Structure& b_;
    int na_;
    int n_;
    SearchStats* stats_;
    std::vector<std::vector<Arc>> adj_;
};

}  // namespace

bool preserves_structure(const Structure& a, const Structure& b, const std::vector<int>& f) {
    if (a.size() != b.size() || static_cast<int>(f.size()) != a.size()) return false;
    std::vector<char> hit(static_cast<std::size_t>(b.size()), 0);
    for (int x : f) {
        if (x < 0 || x >= b.size() || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<std::pair<std::uint32_t, int>> lhs, rhs;
    for (int v = 0; v < a.size(); ++v) {
        int w = f[static_cast<std::size_t>(v)];
        if (a.labels[static_cast<std::size_t>(v)] != b.labels[static_cast<std::size_t>(w)]) return false;
        lhs.clear();
        rhs.clear();
        for (const auto& arc : a.arcs[static_cast<std::size_t>(v)]) lhs.emplace_back(arc.type, f[static_cast<std::size_t>(arc.to)]);
        for (const auto& arc : b.arcs[static_cast<std::size_t>(w)]) rhs.emplace_back(arc.type, arc.to);
        if (lhs.size() != rhs.size()) return false;
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b, SearchStats* stats) {
    Matcher m(a, b, stats);
    return m.run();
}

}  // namespace boxcx::detail
