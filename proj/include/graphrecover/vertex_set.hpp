#pragma once

#include "graphrecover/kernels.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace graphrecover {

using Word = simd::Word;
using Vertex = std::uint32_t;

inline constexpr std::size_t bits_per_word = 64;

constexpr std::size_t word_count(std::size_t n) { return (n + bits_per_word - 1) / bits_per_word; }

/// Bit-set over the universe {0..universe-1}. Bits past the universe are
/// always zero, so whole-word popcounts are exact.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe)) {}

    static VertexSet full(std::size_t universe);
    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
    static VertexSet of(std::size_t universe, std::span<const Vertex> members);
    /// Adopts raw words; bits past `universe` are cleared.
    static VertexSet from_words(std::size_t universe, std::span<const Word> words);

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const { return (words_[v / bits_per_word] >> (v % bits_per_word)) & 1U; }
    void insert(Vertex v) { words_[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
    void erase(Vertex v) { words_[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }
    void toggle(Vertex v) { words_[v / bits_per_word] ^= Word{1} << (v % bits_per_word); }

    std::size_t count() const { return words_.empty() ? 0 : simd::popcount(words_); }
    bool empty() const;
    void clear();

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F &&f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                f(static_cast<Vertex>(i * bits_per_word + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    VertexSet &operator|=(const VertexSet &o);
    VertexSet &operator&=(const VertexSet &o);
    VertexSet &operator^=(const VertexSet &o);
    /// Set difference.
    VertexSet &operator-=(const VertexSet &o);

    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet &b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

    bool operator==(const VertexSet &o) const = default;

    bool is_subset_of(const VertexSet &o) const;

private:
    void require_same_universe(const VertexSet &o) const;

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

/// |a △ b|. Throws std::invalid_argument when the universes differ.
std::size_t symmetric_difference_size(const VertexSet &a, const VertexSet &b);

} // namespace graphrecover
