#pragma once

#include "graphrecover/instance.hpp"
#include "graphrecover/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace graphrecover {

/// Vertex i picks c uniform in [0, min(d, i)] and then c distinct uniform
/// earlier neighbours, so the result is d-degenerate by construction.
Graph gen_degenerate(std::size_t n, std::size_t d, std::uint64_t seed);

/// Random K-node pattern: each loop and each edge with probability 1/2,
/// rejected until is_pattern holds. After 1000 failed attempts it returns
/// alternating_loop_path(K).
Pattern random_pattern(std::size_t node_count, Rng &rng);

/// Path u_0 - ... - u_{K-1} with loops on the even nodes.
Pattern alternating_loop_path(std::size_t node_count);

struct PlantedOptions {
    /// 0 gives uniform node choice; s > 0 weights node u by exp(-s * u).
    double skew = 0.0;
    /// Use this pattern instead of sampling one; its size overrides K.
    std::optional<Pattern> pattern;
};

/// G = gen_degenerate(n, d, seed). The pattern and then the assignment are
/// drawn from Rng(splitmix64(seed ^ 0x5bd1e9955bd1e995)).
PatternedInstance gen_planted(std::size_t n, std::size_t d, std::size_t K, std::uint64_t seed,
                              const PlantedOptions &options = {});

struct KPartiteGraph {
    Graph graph;
    std::vector<Node> part;
    std::size_t parts = 0;
};

/// Random k-partite graph: part sizes given, each inter-part pair present
/// with probability p.
KPartiteGraph gen_kpartite(std::span<const std::size_t> part_sizes, double p, std::uint64_t seed);

/// Hardness-reduction instance from a k-partite graph (k >= 4): G is the
/// edge subdivision, the pattern has loopless nodes u_i (i < k) and u_ij
/// (indexed k + position of (i, j) in lexicographic order) joined by every
/// edge except u_i u_ij and u_j u_ij. apply_pattern has a clique on
/// k + k(k-1)/2 vertices iff the input has a multicoloured k-clique.
/// Subdivision vertices follow the original ones in edge order.
PatternedInstance gen_multicolored_reduction(const KPartiteGraph &input, std::uint64_t seed);

} // namespace graphrecover
