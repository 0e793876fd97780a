#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fheavy {

/// Fixed-universe bitset over vertices 0..universe-1.
///
/// One 64-bit word covers every graph the exhaustive harness touches; larger
/// universes simply use more words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const { return (words_[word(v)] >> bit(v)) & 1U; }
    void insert(int v) { words_[word(v)] |= mask(v); }
    void erase(int v) { words_[word(v)] &= ~mask(v); }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return next(-1); }

    /// Smallest member strictly greater than `after`, or -1.
    int next(int after) const {
        int v = after + 1;
        if (v >= universe_) return -1;
        std::size_t wi = word(v);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << bit(v));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
    static unsigned bit(int v) { return static_cast<unsigned>(v) & 63U; }
    static std::uint64_t mask(int v) { return std::uint64_t{1} << bit(v); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace fheavy
