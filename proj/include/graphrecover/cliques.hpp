#pragma once

#include "graphrecover/pattern.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace graphrecover {

/// k-clique question about H = apply_pattern(pg), with (G, R, partition)
/// given as the witness and G d-degenerate.
struct CliqueQuery {
    std::size_t k = 1;
    PartitionedGraph pg;
    std::size_t d = 0;

    /// Throws std::invalid_argument for k = 0 or a malformed partition and
    /// PreconditionError when degeneracy(pg.graph) > d.
    void validate() const;
};

enum class CliqueBranch {
    /// A loop part larger than (d+1)(k-1): colour G[V_u] with d+1 colours
    /// and take k vertices of the largest class.
    large_loop_part,
    /// Per-part clique lists combined by product search.
    product_search,
};

struct CliqueSearch {
    std::optional<VertexSet> clique;
    CliqueBranch branch = CliqueBranch::product_search;
    /// The part used by large_loop_part.
    Node node = 0;
    /// Cliques listed per node (product_search only, ∅ included).
    std::vector<std::size_t> part_clique_counts;
};

/// Finds a k-clique of apply_pattern(q.pg) or proves there is none. The
/// returned set is checked against the bit rows before it is handed out.
/// The witness is the same for every thread count.
CliqueSearch find_clique_detailed(const CliqueQuery &q);

inline std::optional<VertexSet> find_clique(const CliqueQuery &q) { return find_clique_detailed(q).clique; }

/// All cliques of h[V_u] with at most cap_k vertices, ∅ first. Requires u
/// loopless (then h[V_u] = G[V_u] is d-degenerate and at most 1 + |V_u| 2^d
/// cliques exist) or |V_u| <= (d+1)(cap_k-1) (subset enumeration, at most
/// 2^|V_u|). Throws PreconditionError otherwise, std::logic_error if the
/// count bound is exceeded.
std::vector<VertexSet> enumerate_part_cliques(const PartitionedGraph &pg, Node u, const Graph &h,
                                              std::size_t cap_k, std::size_t d);

/// Every pair of members adjacent in h.
bool is_clique(const Graph &h, const VertexSet &s);

} // namespace graphrecover
