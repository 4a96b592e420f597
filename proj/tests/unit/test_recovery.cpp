#include "graphrecover/generators.hpp"
#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/parallel.hpp"
#include "graphrecover/pattern.hpp"
#include "graphrecover/recovery.hpp"
#include "graphrecover/similarity.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace graphrecover;

namespace {

PlantedOptions one_node(bool loop)
{
    PlantedOptions o;
    o.pattern = Pattern(1);
    o.pattern->set_loop(0, loop);
    return o;
}

/// The blow-up loop recomputed from scratch every iteration.
struct NaiveOutcome {
    Graph F;
    std::vector<VertexSet> sets;
    std::vector<Removal> log;
    VertexSet residual;
};

NaiveOutcome naive_blowup(const Graph &h, const RecoveryConfig &cfg)
{
    const std::size_t n = h.order();
    VertexSet w = VertexSet::full(n);
    GraphBuilder f(n);
    NaiveOutcome out;
    while (w.count() >= cfg.loop_threshold()) {
        bool matched = false;
        for (Vertex v : w.members()) {
            for (std::size_t i = 0; i < out.sets.size() && !matched; ++i) {
                if (set_distance(h, w, v, out.sets[i]) > cfg.match_threshold())
                    continue;
                out.log.push_back({v, i, w.count()});
                w.erase(v);
                (out.sets[i] & w).for_each([&](Vertex x) { f.add_edge(v, x); });
                matched = true;
            }
            if (matched)
                break;
        }
        if (matched)
            continue;
        // Definitional maximum: first vertex of largest degree.
        Vertex best = 0;
        std::size_t best_degree = 0;
        bool first = true;
        w.for_each([&](Vertex v) {
            const std::size_t deg = similarity_degree(h, w, v, cfg.similarity_threshold());
            if (first || deg > best_degree) {
                best = v;
                best_degree = deg;
                first = false;
            }
        });
        out.sets.push_back(h.neighborhood(best) & w);
    }
    out.F = std::move(f).build();
    out.residual = w;
    return out;
}

void check_against_naive(const Graph &h, const RecoveryConfig &cfg)
{
    const auto fast = recover(h, cfg);
    const auto slow = naive_blowup(h, cfg);
    CHECK(fast.F == slow.F);
    CHECK(fast.residual_W == slow.residual);
    REQUIRE(fast.discovered_sets.size() == slow.sets.size());
    for (std::size_t i = 0; i < slow.sets.size(); ++i)
        CHECK(fast.discovered_sets[i].members == slow.sets[i]);
    REQUIRE(fast.removal_log.size() == slow.log.size());
    for (std::size_t i = 0; i < slow.log.size(); ++i) {
        CHECK(fast.removal_log[i].vertex == slow.log[i].vertex);
        CHECK(fast.removal_log[i].set_index == slow.log[i].set_index);
        CHECK(fast.removal_log[i].working_size == slow.log[i].working_size);
    }
    CHECK(graph_symmetric_difference(fast.H, h) == fast.F);
    CHECK(is_well_formed(fast.F));
}

} // namespace

TEST_SUITE("recovery")
{
    TEST_CASE("configuration")
    {
        const RecoveryConfig cfg{1, 2};
        CHECK(cfg.loop_threshold() == 35200);
        CHECK(cfg.similarity_threshold() == 1280);
        CHECK(cfg.match_threshold() == 18240);
        CHECK(cfg.disagreement_bound() == 256000);
        CHECK_THROWS_AS((RecoveryConfig{0, 1}.validate()), std::invalid_argument);
        CHECK_THROWS_AS((RecoveryConfig{1, 0}.validate()), std::invalid_argument);
    }

    TEST_CASE("below the loop threshold nothing changes")
    {
        const auto inst = gen_planted(1099, 1, 1, 3, one_node(true));
        const auto out = recover(inst.H, {1, 1});
        CHECK(out.below_threshold);
        CHECK(out.iterations == 0);
        CHECK(out.F == Graph(1099));
        CHECK(out.H == inst.H);
    }

    TEST_CASE("edgeless G, loopless node: nothing disagrees")
    {
        PartitionedGraph pg{Graph(50), Pattern(1), std::vector<Node>(50, 0)};
        PatternedInstance inst{pg, apply_pattern(pg), 0, 1, 1};
        const RecoveryConfig cfg{1, 1};
        const auto out = recover(inst.H, cfg);
        const auto rep = verify_against_truth(out, inst, cfg);
        CHECK(rep.blowup_disagreement.empty());
        CHECK(rep.pass());
    }

    TEST_CASE("complete graph: F reproduces it outside the residual set")
    {
        const Graph complete = Graph::complete(1200);
        const auto out = recover(complete, {1, 1});
        CHECK(out.discovered_sets.size() == 1);
        CHECK(out.residual_W.count() == 1099);
        CHECK(oracle::agree_without(out.F, complete, out.residual_W));
        CHECK(out.H == graph_symmetric_difference(complete, out.F));
    }

    TEST_CASE("complement of a forest, n = 1200")
    {
        const RecoveryConfig cfg{1, 1};
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto inst = gen_planted(1200, 1, 1, seed, one_node(true));
            const auto out = recover(inst.H, cfg);
            const auto rep = verify_against_truth(out, inst, cfg);
            CHECK(rep.input_matches);
            CHECK(rep.within_bound);
            CHECK(rep.sets_match);
            CHECK(rep.agree_outside);
            CHECK(rep.set_count_ok);
            CHECK(rep.sets_perfect);
            CHECK(rep.pass());
            CHECK(rep.H_degeneracy <= 1 + rep.bound);
        }
    }

    TEST_CASE("incremental loop agrees with the from-scratch loop")
    {
        const RecoveryConfig cfg{1, 1};
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            check_against_naive(gen_planted(1300, 1, 1, seed, one_node(true)).H, cfg);
            check_against_naive(gen_planted(1250, 1, 1, seed, one_node(false)).H, cfg);
        }
        Rng rng(5);
        check_against_naive(oracle::random_graph(2400, 0.5, rng), cfg);
        check_against_naive(oracle::random_graph(1500, 0.15, rng), cfg);
        // Three noisy disjoint cliques: each exhausted block forces a new set.
        const Graph noise = oracle::random_graph(3600, 0.02, rng);
        GraphBuilder b(noise);
        for (Vertex u = 0; u < 3600; ++u)
            for (Vertex v = u + 1; v < 3600 && v / 1200 == u / 1200; ++v)
                b.toggle_edge(u, v);
        const Graph blocks = std::move(b).build();
        CHECK(recover(blocks, cfg).discovered_sets.size() >= 2);
        check_against_naive(blocks, cfg);
    }

    TEST_CASE("corrupted input still yields a report")
    {
        const RecoveryConfig cfg{1, 1};
        const auto inst = gen_planted(1200, 1, 1, 1, one_node(true));
        GraphBuilder b(inst.H);
        b.toggle_edge(3, 700);
        const auto out = recover(std::move(b).build(), cfg);
        VerificationReport rep;
        CHECK_NOTHROW(rep = verify_against_truth(out, inst, cfg));
        CHECK_FALSE(rep.input_matches);
        CHECK_FALSE(rep.pass());
        const auto other = gen_planted(1000, 1, 1, 1, one_node(true));
        CHECK_THROWS_AS(verify_against_truth(out, other, cfg), std::invalid_argument);
    }

    TEST_CASE("outcome does not depend on the thread count")
    {
        const auto inst = gen_planted(2500, 1, 1, 9, one_node(true));
        set_thread_count(1);
        const auto one = recover(inst.H, {1, 1});
        set_thread_count(4);
        const auto four = recover(inst.H, {1, 1});
        set_thread_count(0);
        CHECK(one.F == four.F);
        CHECK(one.H == four.H);
        CHECK(one.removal_log.size() == four.removal_log.size());
    }

    TEST_CASE("recovered witnesses reproduce the input exactly")
    {
        const RecoveryConfig cfg{1, 1};
        Rng rng(12);
        std::vector<Graph> inputs{Graph(0), Graph(5), oracle::random_graph(60, 0.5, rng),
                                  oracle::random_graph(1300, 0.3, rng)};
        for (std::uint64_t seed = 0; seed < 2; ++seed) {
            inputs.push_back(gen_planted(1200, 1, 1, seed, one_node(true)).H);
            inputs.push_back(gen_planted(500, 2, 3, seed).H);
        }
        for (const Graph &h : inputs) {
            const auto pg = witness_from_recovery(h, recover(h, cfg));
            CHECK_NOTHROW(pg.validate());
            CHECK(is_pattern(pg.pattern));
            CHECK(apply_pattern(pg) == h);
        }
        // On the complement of a forest the witness is close to the forest.
        const auto inst = gen_planted(1200, 1, 1, 3, one_node(true));
        const auto pg = witness_from_recovery(inst.H, recover(inst.H, cfg));
        CHECK(pg.pattern.size() <= 2);
        CHECK(degeneracy(pg.graph).value < degeneracy(inst.H).value);
        const auto other = recover(Graph(1200), cfg);
        CHECK_THROWS_AS(witness_from_recovery(Graph(10), other), std::invalid_argument);
    }
}
