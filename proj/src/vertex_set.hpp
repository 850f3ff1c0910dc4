#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#ifndef TOKENSLIDE_SET_WORDS
#define TOKENSLIDE_SET_WORDS 1
#endif

namespace tokenslide {

inline constexpr std::size_t kSetWords = TOKENSLIDE_SET_WORDS;
inline constexpr std::size_t kMaxVertices = 64 * kSetWords;

/// Fixed-width bit vector over vertex indices 0..kMaxVertices-1.
///
/// Ordering is lexicographic on the ascending element sequence, so
/// {0,2,4} < {0,2,5} < {0,3} < {1}. This matches how families of stable
/// sets are listed (135, 136, ..., 468 for TS_3(P_8)).
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<std::size_t> elems) {
        for (auto v : elems) insert(v);
    }

    static VertexSet range(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kSetWords && n > 0; ++w) {
            if (n >= 64) {
                s.words_[w] = ~std::uint64_t{0};
                n -= 64;
            } else {
                s.words_[w] = (std::uint64_t{1} << n) - 1;
                n = 0;
            }
        }
        return s;
    }

    static VertexSet singleton(std::size_t v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest element, or kMaxVertices if empty.
    std::size_t first() const { return next(0); }

    /// Smallest element >= from, or kMaxVertices if none.
    std::size_t next(std::size_t from) const {
        if (from >= kMaxVertices) return kMaxVertices;
        std::size_t w = from >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (bits) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
            if (++w == kSetWords) return kMaxVertices;
            bits = words_[w];
        }
    }

    /// Largest element, or kMaxVertices if empty.
    std::size_t last() const {
        for (std::size_t w = kSetWords; w-- > 0;)
            if (words_[w]) return (w << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        return kMaxVertices;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < kSetWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t w = 0; w < kSetWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < kSetWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Elements shifted up by offset; bits pushed past the width are dropped.
    VertexSet shifted(std::size_t offset) const {
        VertexSet s;
        for (auto v : elements())
            if (v + offset < kMaxVertices) s.insert(v + offset);
        return s;
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (auto v = first(); v < kMaxVertices; v = next(v + 1)) out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kSetWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    const std::array<std::uint64_t, kSetWords>& words() const { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        VertexSet diff = a ^ b;
        auto d = diff.first();
        if (d == kMaxVertices) return std::strong_ordering::equal;
        // Both agree below d. The side holding d is smaller unless the other
        // side has run out of elements (then it is a proper prefix).
        if (a.contains(d)) return b.next(d + 1) < kMaxVertices ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.next(d + 1) < kMaxVertices ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::array<std::uint64_t, kSetWords> words_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// "135"-style label (1-based, concatenated); comma separated if any index >= 9.
std::string set_label(const VertexSet& s, const std::vector<std::string>* names = nullptr);

}  // namespace tokenslide
