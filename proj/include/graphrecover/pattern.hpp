#pragma once

#include "graphrecover/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace graphrecover {

using Node = std::uint32_t;

/// Small graph on nodes 0..K-1 that may carry loops. A candidate becomes a
/// pattern once is_pattern() holds.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::size_t node_count) : k_(node_count), adj_(node_count * node_count, 0) {}

    std::size_t size() const { return k_; }

    /// adjacent(u, u) is the loop flag.
    bool adjacent(Node u, Node v) const { return adj_[u * k_ + v] != 0; }
    bool has_loop(Node u) const { return adjacent(u, u); }

    void set_loop(Node u, bool on = true);
    void set_edge(Node u, Node v, bool on = true);

    /// Pattern neighbours of u, including u itself when it has a loop.
    std::vector<Node> neighbors(Node u) const;

    std::size_t loop_count() const;
    /// Non-loop edges.
    std::size_t edge_count() const;

    bool operator==(const Pattern &o) const = default;

private:
    void check(Node u) const;

    std::size_t k_ = 0;
    std::vector<std::uint8_t> adj_;
};

struct TwinConflict {
    Node first;
    Node second;
};

/// u, u' are twins when they agree on every node outside {u, u'}.
bool pattern_twins(const Pattern &p, Node u, Node v);

/// Twins that are adjacent with both loops, or non-adjacent with neither.
bool mergeable_twins(const Pattern &p, Node u, Node v);

/// First forbidden pair in ascending (u, u') order, if any.
std::optional<TwinConflict> find_forbidden_twins(const Pattern &p);

inline bool is_pattern(const Pattern &p) { return !find_forbidden_twins(p).has_value(); }

/// A graph together with a pattern and a total map vertex -> node. Parts may
/// be empty.
struct PartitionedGraph {
    Graph graph;
    Pattern pattern;
    std::vector<Node> assignment;

    /// Throws std::invalid_argument when the assignment is not a total map
    /// into the pattern's nodes.
    void validate() const;

    VertexSet part(Node u) const;
    std::vector<VertexSet> parts() const;
    std::vector<std::size_t> part_sizes() const;
};

/// Flips vv' (v in V_u, v' in V_u') exactly when uu' is a pattern edge or
/// loop. Runs in O(n^2 / 64) regardless of K.
Graph apply_pattern(const PartitionedGraph &pg);

/// E^R: the pattern applied to the edgeless graph on the assignment's
/// vertices.
Graph perfect_blowup(const Pattern &p, std::span<const Node> assignment);

/// For every node u, the union of V_u' over pattern neighbours u' of u.
std::vector<VertexSet> perfect_sets(const Pattern &p, std::span<const Node> assignment);

struct NodeReduction {
    Pattern pattern;
    /// Old node -> reduced node; nullopt for removed nodes.
    std::vector<std::optional<Node>> node_map;
    /// Reduced node -> sorted original nodes it absorbed.
    std::vector<std::vector<Node>> members;
};

/// Deletes `removed` and merges forbidden twin pairs (first mergeable pair
/// in ascending order, repeated) until the result is a pattern. Reduced
/// nodes are labelled in order of their smallest original node.
NodeReduction reduce_pattern_nodes(const Pattern &p, std::span<const Node> removed);

struct ReducedPartition {
    PartitionedGraph pg;
    /// Vertex i of pg.graph is original_vertex[i] of the input graph.
    std::vector<Vertex> original_vertex;
    NodeReduction nodes;
};

/// Reduction of R \ removed together with the reduced partition of the
/// surviving vertices W. apply_pattern(result.pg) equals
/// apply_pattern(pg)[W].
ReducedPartition reduce_pattern(const PartitionedGraph &pg, std::span<const Node> removed);

using SubsetList = std::vector<VertexSet>;

/// The pattern (at most 2^k nodes, reduced) whose application equals
/// complementing g inside each subset in turn. Supports up to 64 subsets.
PartitionedGraph subsets_to_pattern(const Graph &g, const SubsetList &subsets);

/// Subsets whose sequential complementation reproduces apply_pattern(pg):
/// V_u ∪ V_u' per pattern edge, then V_u for each node whose loop flag plus
/// edge degree is odd. Empty subsets are omitted, so at most K + K(K-1)/2.
SubsetList pattern_to_subsets(const PartitionedGraph &pg);

} // namespace graphrecover
