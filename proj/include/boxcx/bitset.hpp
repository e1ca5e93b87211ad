#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace boxcx {

/// Dynamically sized bitset used for poset closures and reachability.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : bits_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const = default;

    /// Calls fn(i) for every set bit in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Small vertex sets (at most 64 vertices) as machine words.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }

template <typename Fn>
void for_each_member(VertexSet s, Fn&& fn) {
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    for_each_member(s, [&](int v) { out.push_back(v); });
    return out;
}

}  // namespace boxcx
