#include "graphrecover/recovery.hpp"

#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/parallel.hpp"
#include "graphrecover/similarity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace graphrecover {

void RecoveryConfig::validate() const
{
    if (d < 1 || K < 1)
        throw std::invalid_argument("recovery needs d >= 1 and K >= 1 (got d = " + std::to_string(d) +
                                    ", K = " + std::to_string(K) + ")");
}

namespace {

struct Match {
    Vertex vertex;
    std::size_t set_index;
};

class BlowupApproximation {
public:
    BlowupApproximation(const Graph &h, const RecoveryConfig &cfg)
        : h_(h), n_(h.order()), working_(VertexSet::full(h.order())), working_size_(h.order()),
          f_(h.order()), match_threshold_(cfg.match_threshold())
    {
    }

    std::size_t working_size() const { return working_size_; }
    const VertexSet &working() const { return working_; }
    std::size_t set_count() const { return sets_.size(); }

    std::optional<Match> first_match() const
    {
        const auto w = working_.words();
        for (std::size_t i = 0; i < w.size(); ++i) {
            Word word = w[i];
            while (word != 0) {
                const auto v = static_cast<Vertex>(i * bits_per_word +
                                                   static_cast<std::size_t>(std::countr_zero(word)));
                for (std::size_t j = 0; j < sets_.size(); ++j)
                    if (distance_[j][v] <= match_threshold_)
                        return Match{v, j};
                word &= word - 1;
            }
        }
        return std::nullopt;
    }

    void remove(const Match &m)
    {
        const Vertex v = m.vertex;
        working_.erase(v);
        --working_size_;

        // Position v leaves every comparison |(N(x) △ S_j) ∩ W \ {x}|.
        const auto row_v = h_.row(v);
        const auto w = working_.words();
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            const bool in_set = sets_[j].contains(v);
            auto &dist = distance_[j];
            for (std::size_t i = 0; i < w.size(); ++i) {
                Word differs = (in_set ? ~row_v[i] : row_v[i]) & w[i];
                while (differs != 0) {
                    --dist[i * bits_per_word + static_cast<std::size_t>(std::countr_zero(differs))];
                    differs &= differs - 1;
                }
            }
        }

        // F(v, x) for x still in W comes from S_i; F(v, y) for earlier
        // removals y comes from the sets that joined y while containing v.
        auto row = f_.mutable_row(v);
        const auto s = sets_[m.set_index].words();
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] |= s[i] & w[i];
        absorb_joined(v);
        joined_[m.set_index].insert(v);
    }

    void add_set(Vertex chosen, std::size_t similarity_degree)
    {
        VertexSet members = VertexSet::from_words(n_, h_.row(chosen));
        members &= working_;
        std::vector<std::uint32_t> dist(n_, 0);
        const auto w = working_.words();
        const auto members_of_w = working_.members();
        parallel_for(0, members_of_w.size(), [&](std::size_t idx) {
            const Vertex x = members_of_w[idx];
            dist[x] = static_cast<std::uint32_t>(simd::popcount_xor_and(h_.row(x), members.words(), w) -
                                                 (members.contains(x) ? 1 : 0));
        });
        discovered_.push_back({members, chosen, similarity_degree, working_});
        sets_.push_back(std::move(members));
        distance_.push_back(std::move(dist));
        joined_.emplace_back(n_);
    }

    RecoveryOutcome finish(std::vector<Removal> log, std::size_t iterations, bool below, bool aborted) &&
    {
        working_.for_each([&](Vertex x) { absorb_joined(x); });
        RecoveryOutcome out;
        out.F = std::move(f_).build();
        out.discovered_sets = std::move(discovered_);
        out.removal_log = std::move(log);
        out.residual_W = std::move(working_);
        out.iterations = iterations;
        out.below_threshold = below;
        out.aborted = aborted;
        return out;
    }

private:
    void absorb_joined(Vertex x)
    {
        auto row = f_.mutable_row(x);
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (!sets_[j].contains(x))
                continue;
            const auto r = joined_[j].words();
            for (std::size_t i = 0; i < row.size(); ++i)
                row[i] |= r[i];
        }
    }

    const Graph &h_;
    std::size_t n_;
    VertexSet working_;
    std::size_t working_size_;
    GraphBuilder f_;
    std::uint64_t match_threshold_;
    std::vector<VertexSet> sets_;
    std::vector<std::vector<std::uint32_t>> distance_;
    /// Vertices already removed and joined to each S_j.
    std::vector<VertexSet> joined_;
    std::vector<DiscoveredSet> discovered_;
};

} // namespace

RecoveryOutcome recover_blowup(const Graph &h, const RecoveryConfig &cfg)
{
    cfg.validate();
    const std::uint64_t loop_threshold = cfg.loop_threshold();
    BlowupApproximation state(h, cfg);
    std::vector<Removal> log;
    std::size_t iterations = 0;
    bool aborted = false;
    while (state.working_size() >= loop_threshold) {
        ++iterations;
        if (const auto m = state.first_match()) {
            log.push_back({m->vertex, m->set_index, state.working_size()});
            state.remove(*m);
            continue;
        }
        if (state.set_count() > h.order()) {
            aborted = true;
            break;
        }
        const auto top = max_similarity_degree(h, state.working(), cfg.similarity_threshold());
        state.add_set(top.vertex, top.degree);
    }
    return std::move(state).finish(std::move(log), iterations, h.order() < loop_threshold, aborted);
}

RecoveryOutcome recover(const Graph &h, const RecoveryConfig &cfg)
{
    auto out = recover_blowup(h, cfg);
    out.H = graph_symmetric_difference(h, out.F);
    return out;
}

VerificationReport verify_against_truth(const RecoveryOutcome &outcome, const PatternedInstance &truth,
                                        const RecoveryConfig &cfg)
{
    cfg.validate();
    truth.pg.validate();
    if (outcome.H.order() != truth.H.order() || outcome.F.order() != truth.H.order())
        throw std::invalid_argument("verify_against_truth: outcome has " + std::to_string(outcome.H.order()) +
                                    " vertices, the instance " + std::to_string(truth.H.order()));

    VerificationReport report;
    report.input_matches = graph_symmetric_difference(outcome.H, outcome.F) == truth.H;
    report.bound = cfg.disagreement_bound();
    const Graph blowup = perfect_blowup(truth.pg.pattern, truth.pg.assignment);
    report.blowup_disagreement = disagreement_vertices(outcome.F, blowup);
    report.graph_disagreement = disagreement_vertices(outcome.H, truth.G());
    report.within_bound = report.blowup_disagreement.count() <= report.bound;
    report.sets_match = report.blowup_disagreement == report.graph_disagreement;

    const VertexSet keep = VertexSet::full(blowup.order()) - report.blowup_disagreement;
    report.agree_outside = induced_subgraph(outcome.F, keep).graph == induced_subgraph(blowup, keep).graph;

    report.set_count = outcome.discovered_sets.size();
    report.set_count_ok = report.set_count <= cfg.K;

    const auto perfect = perfect_sets(truth.pg.pattern, truth.pg.assignment);
    const std::uint64_t perfect_bound = bounds::maxdeg_perfect(cfg.d, cfg.K);
    for (const auto &s : outcome.discovered_sets) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const auto &p : perfect) {
            const VertexSet target = p & s.working_set;
            best = std::min(best, symmetric_difference_size(s.members, target) -
                                      (target.contains(s.chosen) ? 1 : 0));
        }
        if (!perfect.empty()) {
            report.worst_set_distance = std::max(report.worst_set_distance, best);
            report.sets_perfect = report.sets_perfect && best <= perfect_bound;
        }
    }
    report.H_degeneracy = degeneracy(outcome.H).value;
    return report;
}

PartitionedGraph witness_from_recovery(const Graph &h, const RecoveryOutcome &outcome)
{
    const std::size_t n = h.order();
    if (outcome.F.order() != n)
        throw std::invalid_argument("outcome and graph differ in order");
    const std::size_t sets = outcome.discovered_sets.size();

    // Signature: matched set (sets = unmatched), then membership bits.
    std::vector<std::vector<bool>> signature(n, std::vector<bool>(sets + 1 + sets, false));
    std::vector<bool> matched(n, false);
    for (const auto &r : outcome.removal_log) {
        signature[r.vertex][r.set_index] = true;
        matched[r.vertex] = true;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!matched[v])
            signature[v][sets] = true;
    for (std::size_t i = 0; i < sets; ++i)
        outcome.discovered_sets[i].members.for_each([&](Vertex v) { signature[v][sets + 1 + i] = true; });

    std::map<std::vector<bool>, Node> ids;
    PartitionedGraph pg;
    pg.assignment.resize(n);
    for (Vertex v = 0; v < n; ++v)
        pg.assignment[v] = ids.try_emplace(signature[v], static_cast<Node>(ids.size())).first->second;
    const std::size_t k = std::max<std::size_t>(ids.size(), 1);

    // Pair counts of h between groups.
    std::vector<VertexSet> groups(k, VertexSet(n));
    for (Vertex v = 0; v < n; ++v)
        groups[pg.assignment[v]].insert(v);
    std::vector<std::uint64_t> edges(k * k, 0);
    for (Vertex v = 0; v < n; ++v) {
        const VertexSet row = h.neighborhood(v);
        for (Node b = 0; b < k; ++b)
            edges[pg.assignment[v] * k + b] += (row & groups[b]).count();
    }
    pg.pattern = Pattern(k);
    for (Node a = 0; a < k; ++a) {
        const std::uint64_t size_a = groups[a].count();
        for (Node b = a; b < k; ++b) {
            const std::uint64_t pairs = a == b ? size_a * (size_a - 1) : size_a * groups[b].count();
            // Ordered pairs, so each edge is counted twice within a group.
            const std::uint64_t present = edges[a * k + b];
            const bool majority = pairs > 0 && 2 * present > pairs;
            if (a == b)
                pg.pattern.set_loop(a, majority);
            else
                pg.pattern.set_edge(a, b, majority);
        }
    }
    pg.graph = graph_symmetric_difference(h, perfect_blowup(pg.pattern, pg.assignment));
    return std::move(reduce_pattern(pg, {}).pg);
}

} // namespace graphrecover
