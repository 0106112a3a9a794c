#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace planturan {

using Word = std::uint64_t;

inline constexpr int kWordBits = 64;

constexpr int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

// Dynamic bitset over a fixed universe of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {}

    int universe() const { return universe_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

    int count() const
    {
        int c = 0;
        for (Word w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (Word w : words_)
            if (w)
                return true;
        return false;
    }

    bool intersects(const VertexSet & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i) * kWordBits + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const VertexSet &) const = default;

private:
    int universe_ = 0;
    std::vector<Word> words_;
};

inline int popcount_and(std::span<const Word> a, std::span<const Word> b)
{
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

}
