#pragma once

#include "graphrecover/pattern.hpp"

#include <cstdint>

namespace graphrecover {

/// Ground truth for planted experiments: pg.graph is the sparse graph G,
/// H = apply_pattern(pg).
struct PatternedInstance {
    PartitionedGraph pg;
    Graph H;
    std::uint64_t seed = 0;
    std::size_t d = 0;
    std::size_t K = 0;

    const Graph &G() const { return pg.graph; }
};

} // namespace graphrecover
