#pragma once

#include "graphrecover/vertex_set.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace graphrecover {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on 0..n-1 stored as a dense bit matrix, one
/// packed row per vertex. Rows are symmetric with a zero diagonal. Values
/// are immutable; mutate through GraphBuilder.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : n_(n), stride_(word_count(n)), bits_(n * stride_) {}

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph complete(std::size_t n);

    std::size_t order() const { return n_; }
    std::size_t words_per_row() const { return stride_; }

    std::span<const Word> row(Vertex v) const { return {bits_.data() + v * stride_, stride_}; }

    bool adjacent(Vertex a, Vertex b) const
    {
        return (bits_[a * stride_ + b / bits_per_word] >> (b % bits_per_word)) & 1U;
    }

    std::size_t degree(Vertex v) const;
    std::size_t edge_count() const;
    std::size_t max_degree() const;

    VertexSet neighborhood(Vertex v) const { return VertexSet::from_words(n_, row(v)); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;

    bool operator==(const Graph &o) const = default;

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> bits_;
};

/// Single-owner mutable adjacency. Edge-level mutators keep the matrix
/// symmetric; mutable_row() hands out raw rows for bulk updates and the
/// caller is responsible for symmetry and the diagonal before build().
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : g_(n) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    std::size_t order() const { return g_.n_; }

    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    void toggle_edge(Vertex a, Vertex b);
    bool has_edge(Vertex a, Vertex b) const { return g_.adjacent(a, b); }

    std::span<Word> mutable_row(Vertex v) { return {g_.bits_.data() + v * g_.stride_, g_.stride_}; }
    std::span<const Word> row(Vertex v) const { return g_.row(v); }

    Graph build() && { return std::move(g_); }

private:
    void check_pair(Vertex a, Vertex b) const;

    Graph g_;
};

/// Symmetric rows, empty diagonal, no stray bits past n.
bool is_well_formed(const Graph &g);

} // namespace graphrecover
