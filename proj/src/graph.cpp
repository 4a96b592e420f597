#include "graphrecover/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphrecover {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::complete(std::size_t n) { return Graph(n).complement(); }

std::size_t Graph::degree(Vertex v) const { return stride_ == 0 ? 0 : simd::popcount(row(v)); }

std::size_t Graph::edge_count() const
{
    return bits_.empty() ? 0 : simd::popcount(bits_) / 2;
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        const auto r = row(u);
        for (std::size_t i = (u + 1) / bits_per_word; i < stride_; ++i) {
            Word w = r[i];
            if (i == (u + 1) / bits_per_word)
                w &= ~Word{0} << ((u + 1) % bits_per_word);
            while (w != 0) {
                out.emplace_back(u, static_cast<Vertex>(i * bits_per_word +
                                                        static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }
    return out;
}

Graph Graph::complement() const
{
    Graph c(n_);
    const VertexSet all = VertexSet::full(n_);
    for (Vertex v = 0; v < n_; ++v) {
        Word *dst = c.bits_.data() + v * stride_;
        const Word *src = bits_.data() + v * stride_;
        for (std::size_t i = 0; i < stride_; ++i)
            dst[i] = ~src[i] & all.words()[i];
        dst[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
    }
    return c;
}

void GraphBuilder::check_pair(Vertex a, Vertex b) const
{
    if (a >= g_.n_ || b >= g_.n_)
        throw std::out_of_range("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") outside graph of order " + std::to_string(g_.n_));
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
}

void GraphBuilder::add_edge(Vertex a, Vertex b)
{
    check_pair(a, b);
    mutable_row(a)[b / bits_per_word] |= Word{1} << (b % bits_per_word);
    mutable_row(b)[a / bits_per_word] |= Word{1} << (a % bits_per_word);
}

void GraphBuilder::remove_edge(Vertex a, Vertex b)
{
    check_pair(a, b);
    mutable_row(a)[b / bits_per_word] &= ~(Word{1} << (b % bits_per_word));
    mutable_row(b)[a / bits_per_word] &= ~(Word{1} << (a % bits_per_word));
}

void GraphBuilder::toggle_edge(Vertex a, Vertex b)
{
    check_pair(a, b);
    mutable_row(a)[b / bits_per_word] ^= Word{1} << (b % bits_per_word);
    mutable_row(b)[a / bits_per_word] ^= Word{1} << (a % bits_per_word);
}

bool is_well_formed(const Graph &g)
{
    const std::size_t n = g.order();
    const std::size_t tail = n % bits_per_word;
    for (Vertex v = 0; v < n; ++v) {
        if (g.adjacent(v, v))
            return false;
        if (tail != 0 && (g.row(v).back() >> tail) != 0)
            return false;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u))
                return false;
    return true;
}

} // namespace graphrecover
