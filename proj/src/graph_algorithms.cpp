#include "graphrecover/graph_algorithms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace graphrecover {

namespace {

void require_same_order(const Graph &a, const Graph &b, const char *what)
{
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(what) + ": graphs of different order (" +
                                    std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                                    ")");
}

struct RowHash {
    std::size_t operator()(std::span<const Word> r) const
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (Word w : r)
            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

struct RowEq {
    bool operator()(std::span<const Word> a, std::span<const Word> b) const
    {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
};

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

    Vertex find(Vertex v)
    {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(Vertex a, Vertex b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<Vertex> parent;
};

} // namespace

Degeneracy degeneracy(const Graph &g)
{
    const std::size_t n = g.order();
    Degeneracy out;
    out.elimination_order.reserve(n);
    if (n == 0)
        return out;

    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // Doubly linked bucket lists keyed by current degree.
    constexpr Vertex none = ~Vertex{0};
    std::vector<Vertex> head(max_deg + 1, none), next(n, none), prev(n, none);
    auto unlink = [&](Vertex v) {
        if (prev[v] != none)
            next[prev[v]] = next[v];
        else
            head[deg[v]] = next[v];
        if (next[v] != none)
            prev[next[v]] = prev[v];
    };
    auto link = [&](Vertex v) {
        prev[v] = none;
        next[v] = head[deg[v]];
        if (next[v] != none)
            prev[next[v]] = v;
        head[deg[v]] = v;
    };
    // Insert in descending id order so each bucket pops its smallest id first.
    for (Vertex v = static_cast<Vertex>(n); v-- > 0;)
        link(v);

    std::vector<bool> removed(n, false);
    std::size_t cursor = 0;
    for (std::size_t step = 0; step < n; ++step) {
        if (cursor > 0)
            --cursor;
        while (head[cursor] == none)
            ++cursor;
        const Vertex v = head[cursor];
        unlink(v);
        removed[v] = true;
        out.value = std::max(out.value, deg[v]);
        out.elimination_order.push_back(v);
        g.neighborhood(v).for_each([&](Vertex w) {
            if (!removed[w]) {
                unlink(w);
                --deg[w];
                link(w);
            }
        });
    }
    return out;
}

std::vector<std::vector<Vertex>> twin_classes(const Graph &g)
{
    const std::size_t n = g.order();
    UnionFind uf(n);

    // Non-adjacent twins share the open neighbourhood.
    std::unordered_map<std::span<const Word>, Vertex, RowHash, RowEq> open_rows;
    for (Vertex v = 0; v < n; ++v) {
        auto [it, inserted] = open_rows.try_emplace(g.row(v), v);
        if (!inserted)
            uf.unite(it->second, v);
    }

    // Adjacent twins share the closed neighbourhood N(v) ∪ {v}.
    std::vector<Word> closed(n * g.words_per_row());
    const std::size_t stride = g.words_per_row();
    for (Vertex v = 0; v < n; ++v) {
        const auto r = g.row(v);
        std::copy(r.begin(), r.end(), closed.begin() + static_cast<std::ptrdiff_t>(v * stride));
        closed[v * stride + v / bits_per_word] |= Word{1} << (v % bits_per_word);
    }
    std::unordered_map<std::span<const Word>, Vertex, RowHash, RowEq> closed_rows;
    for (Vertex v = 0; v < n; ++v) {
        auto [it, inserted] =
            closed_rows.try_emplace(std::span<const Word>(closed.data() + v * stride, stride), v);
        if (!inserted)
            uf.unite(it->second, v);
    }

    std::vector<std::vector<Vertex>> classes;
    std::vector<std::size_t> index(n, ~std::size_t{0});
    for (Vertex v = 0; v < n; ++v) {
        const Vertex root = uf.find(v);
        if (index[root] == ~std::size_t{0}) {
            index[root] = classes.size();
            classes.emplace_back();
        }
        classes[index[root]].push_back(v);
    }
    return classes;
}

Graph graph_symmetric_difference(const Graph &a, const Graph &b)
{
    require_same_order(a, b, "graph_symmetric_difference");
    GraphBuilder out(a);
    for (Vertex v = 0; v < a.order(); ++v) {
        auto dst = out.mutable_row(v);
        const auto src = b.row(v);
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst[i] ^= src[i];
    }
    return std::move(out).build();
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &w)
{
    if (w.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: vertex set universe " +
                                    std::to_string(w.universe()) + " != graph order " +
                                    std::to_string(g.order()));
    InducedSubgraph out;
    out.original = w.members();
    const std::size_t m = out.original.size();
    std::vector<Vertex> rank(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i)
        rank[out.original[i]] = static_cast<Vertex>(i);
    GraphBuilder b(m);
    const auto mask = w.words();
    for (std::size_t i = 0; i < m; ++i) {
        auto dst = b.mutable_row(static_cast<Vertex>(i));
        const auto r = g.row(out.original[i]);
        for (std::size_t k = 0; k < r.size(); ++k) {
            Word word = r[k] & mask[k];
            while (word != 0) {
                const Vertex j = rank[k * bits_per_word + static_cast<std::size_t>(std::countr_zero(word))];
                dst[j / bits_per_word] |= Word{1} << (j % bits_per_word);
                word &= word - 1;
            }
        }
    }
    out.graph = std::move(b).build();
    return out;
}

VertexSet disagreement_vertices(const Graph &a, const Graph &b)
{
    require_same_order(a, b, "disagreement_vertices");
    VertexSet out(a.order());
    for (Vertex v = 0; v < a.order(); ++v) {
        const auto ra = a.row(v);
        const auto rb = b.row(v);
        if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end()))
            out.insert(v);
    }
    return out;
}

} // namespace graphrecover
