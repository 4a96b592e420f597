#include "graphrecover/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphrecover {

namespace {

void trim_tail(std::size_t universe, std::span<Word> words)
{
    if (universe % bits_per_word != 0 && !words.empty())
        words.back() &= (Word{1} << (universe % bits_per_word)) - 1;
}

} // namespace

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    trim_tail(universe, s.words_);
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members)
{
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members) {
        if (v >= universe)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(universe));
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> words)
{
    if (words.size() != word_count(universe))
        throw std::invalid_argument("word count does not match universe");
    VertexSet s(universe);
    std::copy(words.begin(), words.end(), s.words_.begin());
    trim_tail(universe, s.words_);
    return s;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

void VertexSet::require_same_universe(const VertexSet &o) const
{
    if (universe_ != o.universe_)
        throw std::invalid_argument("vertex sets over different universes (" +
                                    std::to_string(universe_) + " vs " + std::to_string(o.universe_) +
                                    ")");
}

VertexSet &VertexSet::operator|=(const VertexSet &o)
{
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &o)
{
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

VertexSet &VertexSet::operator^=(const VertexSet &o)
{
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= o.words_[i];
    return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &o)
{
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~o.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet &o) const
{
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~o.words_[i]) != 0)
            return false;
    return true;
}

std::size_t symmetric_difference_size(const VertexSet &a, const VertexSet &b)
{
    if (a.universe() != b.universe())
        throw std::invalid_argument("symmetric_difference_size: universes differ (" +
                                    std::to_string(a.universe()) + " vs " +
                                    std::to_string(b.universe()) + ")");
    return a.words().empty() ? 0 : simd::popcount_xor(a.words(), b.words());
}

} // namespace graphrecover
