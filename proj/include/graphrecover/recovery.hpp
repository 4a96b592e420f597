#pragma once

#include "graphrecover/instance.hpp"
#include "graphrecover/lemma_checks.hpp"

#include <cstdint>
#include <vector>

namespace graphrecover {

struct RecoveryConfig {
    std::size_t d = 1;
    std::size_t K = 1;

    /// Throws std::invalid_argument unless d >= 1 and K >= 1.
    void validate() const;

    std::uint64_t loop_threshold() const { return bounds::loop(d, K); }
    std::uint64_t similarity_threshold() const { return bounds::similarity(d, K); }
    std::uint64_t match_threshold() const { return bounds::match(d, K); }
    std::uint64_t disagreement_bound() const { return bounds::disagreement(d, K); }
};

struct DiscoveredSet {
    /// S_i = N_{h[W_i]}(chosen)
    VertexSet members;
    Vertex chosen = 0;
    std::size_t chosen_similarity_degree = 0;
    /// W_i, the working set when S_i was recorded.
    VertexSet working_set;
};

struct Removal {
    Vertex vertex = 0;
    std::size_t set_index = 0;
    /// |W| just before the removal.
    std::size_t working_size = 0;
};

struct RecoveryOutcome {
    Graph F;
    /// input △ F; only filled in by recover().
    Graph H;
    std::vector<DiscoveredSet> discovered_sets;
    std::vector<Removal> removal_log;
    VertexSet residual_W;
    std::size_t iterations = 0;
    /// The input was smaller than the loop threshold.
    bool below_threshold = false;
    /// The set-count guard fired (only possible on inputs that are not G^R).
    bool aborted = false;
};

/// The blow-up approximation loop. While |W| >= 1100dK^5: take the smallest
/// v in W, and for it the smallest i, with N_{h[W]}(v) (1140dK^4)-similar to
/// S_i ∩ W; remove v and join it in F to S_i ∩ W. If there is none, record
/// S_{k+1} = N_{h[W]}(w) for the top vertex w of the (160dK^3)-similarity
/// graph of h[W]. Deterministic for any thread count.
RecoveryOutcome recover_blowup(const Graph &h, const RecoveryConfig &cfg);

/// recover_blowup followed by H = h △ F.
RecoveryOutcome recover(const Graph &h, const RecoveryConfig &cfg);

struct VerificationReport {
    /// outcome.H △ outcome.F is truth.H, i.e. the outcome came from this
    /// instance's G^R.
    bool input_matches = false;
    std::size_t bound = 0;
    /// U* = disagreement_vertices(F, E^R)
    VertexSet blowup_disagreement;
    /// disagreement_vertices(H, G)
    VertexSet graph_disagreement;
    bool within_bound = false;
    bool sets_match = false;
    /// F and E^R coincide once U* is deleted from both.
    bool agree_outside = false;
    std::size_t set_count = 0;
    bool set_count_ok = false;
    /// Largest min_u |S_i △ (u-perfect set ∩ W_i)| over discovered sets, the
    /// chosen vertex ignored, and whether it stays within 570dK^4.
    std::size_t worst_set_distance = 0;
    bool sets_perfect = true;
    std::size_t H_degeneracy = 0;

    bool pass() const { return input_matches && within_bound && sets_match && agree_outside && set_count_ok; }
};

/// Witness (G', R', partition) for h built from an outcome of recover(h).
/// Vertices are grouped by the set they were matched to and by their
/// membership in the discovered sets; each node pair takes the majority
/// adjacency of h between the groups, and G' = h △ (R' applied to the
/// edgeless graph). apply_pattern(result) == h for every outcome, only the
/// degeneracy of G' depends on how well the outcome fits h. The pattern is
/// reduced.
PartitionedGraph witness_from_recovery(const Graph &h, const RecoveryOutcome &outcome);

/// Compares an outcome against the planted truth. Throws
/// std::invalid_argument when the vertex counts differ; a different input
/// graph on the same vertices is reported through input_matches.
VerificationReport verify_against_truth(const RecoveryOutcome &outcome, const PatternedInstance &truth,
                                        const RecoveryConfig &cfg);

} // namespace graphrecover
