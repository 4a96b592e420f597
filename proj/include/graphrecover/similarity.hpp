#pragma once

// Neighbourhood similarity inside an induced subgraph h[W].
//
// Two vertices v, v' of W are compared on their rows restricted to W with
// the positions v and v' themselves ignored, so twins are 0-similar whether
// or not they are adjacent. A vertex compared against a set X ignores its
// own position in X.

#include "graphrecover/graph.hpp"
#include "graphrecover/pattern.hpp"

#include <cstddef>
#include <vector>

namespace graphrecover {

/// |(N_{h[W]}(a) △ N_{h[W]}(b)) \ {a, b}| for a, b in W.
std::size_t vertex_distance(const Graph &h, const VertexSet &w, Vertex a, Vertex b);

/// |(N_{h[W]}(v) △ (X ∩ W)) \ {v}| for v in W.
std::size_t set_distance(const Graph &h, const VertexSet &w, Vertex v, const VertexSet &x);

/// Number of v' in W, v' != v, that are k-similar to v. Throws
/// std::invalid_argument when v is not in W.
std::size_t similarity_degree(const Graph &h, const VertexSet &w, Vertex v, std::size_t k);

/// Similarity degrees of every vertex of W (0 outside W), using
/// SimilarityIndex and all configured threads.
std::vector<std::size_t> similarity_degrees(const Graph &h, const VertexSet &w, std::size_t k);

struct SimilarityMaximum {
    Vertex vertex = 0;
    std::size_t degree = 0;
};

/// Vertex of W with the largest similarity degree, smallest id on ties.
/// Throws std::invalid_argument for empty W.
SimilarityMaximum max_similarity_degree(const Graph &h, const VertexSet &w, std::size_t k);

inline Vertex max_similarity_degree_vertex(const Graph &h, const VertexSet &w, std::size_t k)
{
    return max_similarity_degree(h, w, k).vertex;
}

/// Exact similarity-degree engine for one (h, W).
///
/// Rows are delta-encoded against a few reference rows ("centres"): each
/// vertex stores the sorted positions where its W-row differs from its
/// nearest centre, when that list is short. For a pair with centres c, c'
/// the raw distance is |δ △ δ' △ (c △ c')|, so |c △ c'| ± |δ| ± |δ'| gives
/// exact accept/reject bounds and most pairs are decided by a binary search
/// over delta sizes. Undecided pairs fall back to a sorted merge (same
/// centre) or the popcount kernel. Vertices far from every centre are kept
/// dense and compared with degree pruning.
class SimilarityIndex {
public:
    struct Options {
        std::size_t max_centers = 64;
        /// Longest delta list kept sparse; 0 picks max(32, words per row).
        std::size_t max_delta = 0;
    };

    SimilarityIndex(const Graph &h, const VertexSet &w) : SimilarityIndex(h, w, Options{}) {}
    SimilarityIndex(const Graph &h, const VertexSet &w, Options options);

    std::size_t degree(Vertex v, std::size_t k) const;
    std::vector<std::size_t> degrees(std::size_t k) const;

    std::size_t center_count() const { return centers_.size(); }
    std::size_t dense_count() const { return dense_.size(); }
    std::size_t sparse_count() const { return members_.size() - dense_.size(); }

private:
    struct Group {
        std::vector<Vertex> by_size;
        std::vector<std::size_t> sizes;
    };

    std::size_t raw_distance(Vertex a, Vertex b) const;
    std::size_t exact_distance(Vertex a, Vertex b) const;
    std::size_t count_dense_side(Vertex v, std::size_t k, const std::vector<Vertex> &others) const;

    const Graph *h_;
    VertexSet w_;
    std::vector<Vertex> members_;
    std::vector<std::size_t> restricted_degree_;
    static constexpr std::size_t no_group = ~std::size_t{0};
    std::vector<std::size_t> group_of_;
    std::vector<std::size_t> delta_offset_;
    std::vector<std::size_t> delta_length_;
    std::vector<Vertex> delta_pool_;
    std::vector<Vertex> centers_;
    std::vector<std::size_t> center_distance_;
    std::vector<Group> groups_;
    std::vector<Vertex> dense_;
};

/// Union of V_u' over pattern neighbours u' of u (V_u included iff u has a
/// loop). Throws std::out_of_range for an unknown node.
VertexSet u_perfect_set(const PartitionedGraph &pg, Node u);

struct PerfectnessReport {
    Vertex vertex = 0;
    /// Node minimising the distance, smallest id on ties.
    Node best_node = 0;
    std::size_t distance = 0;
    /// |N_h(v) △ (u-perfect set \ {v})| for every node u.
    std::vector<std::size_t> node_distances;

    bool perfect_for(Node u, std::size_t c) const { return node_distances[u] <= c; }
};

/// h must have the same vertex set as pg.graph.
PerfectnessReport perfectness(const PartitionedGraph &pg, const Graph &h, Vertex v);

} // namespace graphrecover
