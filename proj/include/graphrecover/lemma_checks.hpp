#pragma once

// Executable checks of the structural bounds behind the recovery algorithm.
// d defaults to degeneracy(pg.graph); K is always the pattern's node count.
// Reports carry pass/fail; only unmet preconditions throw.

#include "graphrecover/pattern.hpp"
#include "graphrecover/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace graphrecover {

namespace bounds {
constexpr std::uint64_t cube(std::uint64_t k) { return k * k * k; }
constexpr std::uint64_t infract_perfect(std::uint64_t d, std::uint64_t k) { return 80 * d * cube(k); }
constexpr std::uint64_t similarity(std::uint64_t d, std::uint64_t k) { return 160 * d * cube(k); }
constexpr std::uint64_t outconst_part(std::uint64_t d, std::uint64_t k) { return 330 * d * cube(k); }
constexpr std::uint64_t outconst_outside(std::uint64_t d, std::uint64_t k) { return 330 * d * cube(k) * k; }
constexpr std::uint64_t maxdeg_perfect(std::uint64_t d, std::uint64_t k) { return 570 * d * cube(k) * k; }
constexpr std::uint64_t match(std::uint64_t d, std::uint64_t k) { return 1140 * d * cube(k) * k; }
constexpr std::uint64_t loop(std::uint64_t d, std::uint64_t k) { return 1100 * d * cube(k) * k * k; }
constexpr std::uint64_t disagreement(std::uint64_t d, std::uint64_t k) { return 4000 * d * cube(k) * cube(k); }
} // namespace bounds

struct PartPerfectCount {
    Node node = 0;
    std::size_t size = 0;
    /// |V_u| >= M / (4K)
    bool eligible = false;
    std::size_t perfect = 0;
    /// ceil((1 - 1/(10K)) |V_u|)
    std::size_t required = 0;
    bool pass = true;
};

struct InFractReport {
    std::size_t d = 0;
    std::size_t K = 0;
    std::size_t max_part = 0;
    std::size_t threshold = 0;
    std::vector<PartPerfectCount> parts;
    bool pass = true;
};

/// Every part with |V_u| >= M/(4K) has at least (1 - 1/(10K))|V_u| vertices
/// that are (u, 80dK^3)-perfect in apply_pattern(pg). Counts are exact.
InFractReport check_lemma_infract(const PartitionedGraph &pg, std::optional<std::size_t> d = {});

struct OutConstSample {
    std::size_t similar = 0;
    Node best_node = 0;
    std::size_t captured = 0;
    std::size_t outside = 0;
    bool pass = true;
};

struct OutConstReport {
    std::size_t d = 0;
    std::size_t K = 0;
    std::size_t similarity_threshold = 0;
    std::size_t outside_bound = 0;
    std::vector<OutConstSample> samples;
    bool pass = true;
};

/// For each sample set X: among vertices whose G^R-neighbourhood is
/// (160dK^3)-similar to X, all but 330dK^4 lie in one part. Requires every
/// part to have at least 330dK^3 vertices (PreconditionError otherwise).
OutConstReport check_lemma_outconst(const PartitionedGraph &pg, const std::vector<VertexSet> &samples,
                                    std::optional<std::size_t> d = {});

/// Sample sets for check_lemma_outconst: unions of random node subsets'
/// parts, each perturbed by up to 80dK^3 random flips, plus the exact
/// u-perfect sets first.
std::vector<VertexSet> outconst_samples(const PartitionedGraph &pg, std::size_t count, std::size_t d,
                                        std::uint64_t seed);

struct MaxDegreeReport {
    std::size_t d = 0;
    std::size_t K = 0;
    std::size_t similarity_threshold = 0;
    std::size_t perfect_bound = 0;
    Vertex vertex = 0;
    std::size_t similarity_degree = 0;
    Node best_node = 0;
    std::size_t distance = 0;
    bool pass = true;
};

/// The top vertex of the (160dK^3)-similarity graph of apply_pattern(pg) is
/// (u, 570dK^4)-perfect for some u. Requires n >= 1100dK^5.
MaxDegreeReport check_lemma_maxdeg(const PartitionedGraph &pg, std::optional<std::size_t> d = {});

} // namespace graphrecover
