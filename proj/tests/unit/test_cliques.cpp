#include "graphrecover/cliques.hpp"
#include "graphrecover/errors.hpp"
#include "graphrecover/generators.hpp"
#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/parallel.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace graphrecover;

namespace {

Graph path(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(v - 1, v);
    return std::move(b).build();
}

PartitionedGraph single(const Graph &g, bool loop)
{
    PartitionedGraph pg{g, Pattern(1), std::vector<Node>(g.order(), 0)};
    pg.pattern.set_loop(0, loop);
    return pg;
}

std::set<std::vector<Vertex>> as_sorted(const std::vector<VertexSet> &sets)
{
    std::set<std::vector<Vertex>> out;
    for (const auto &s : sets)
        out.insert(s.members());
    return out;
}

} // namespace

TEST_SUITE("cliques")
{
    TEST_CASE("forest with a loopless node: edges but no triangles")
    {
        const Graph g = path(7);
        const auto pg = single(g, false);
        const auto two = find_clique_detailed({2, pg, 1});
        REQUIRE(two.clique);
        CHECK(two.branch == CliqueBranch::product_search);
        CHECK(two.clique->count() == 2);
        CHECK(is_clique(g, *two.clique));
        CHECK_FALSE(find_clique({3, pg, 1}));
        CHECK(find_clique({1, pg, 1})->count() == 1);
    }

    TEST_CASE("complement of a path: a large loop part yields an independent set")
    {
        const auto pg = single(path(6), true);
        const auto r = find_clique_detailed({3, pg, 1});
        REQUIRE(r.clique);
        CHECK(r.branch == CliqueBranch::large_loop_part);
        CHECK(r.node == 0);
        CHECK(is_clique(apply_pattern(pg), *r.clique));
        for (Vertex a : r.clique->members())
            for (Vertex b : r.clique->members())
                CHECK_FALSE(pg.graph.adjacent(a, b));
    }

    TEST_CASE("loop-part threshold is (d+1)(k-1)")
    {
        // Complement of P6 has independence number 3 in P6 terms, so no
        // 4-clique and no 5-clique. |V_u| = 6 is not above (1+1)(4-1) = 6 or
        // (1+1)(5-1) = 8, so the exact search decides both.
        const auto pg = single(path(6), true);
        for (std::size_t k : {4, 5}) {
            const auto r = find_clique_detailed({k, pg, 1});
            CHECK(r.branch == CliqueBranch::product_search);
            CHECK_FALSE(r.clique);
        }
        // Above the threshold a clique always exists.
        const auto big = single(path(7), true);
        const auto r = find_clique_detailed({4, big, 1});
        CHECK(r.branch == CliqueBranch::large_loop_part);
        REQUIRE(r.clique);
        CHECK(r.clique->count() == 4);
    }

    TEST_CASE("part clique lists: small examples")
    {
        const auto edgeless = single(Graph(3), false);
        const auto list = enumerate_part_cliques(edgeless, 0, edgeless.graph, 3, 0);
        CHECK(as_sorted(list) == std::set<std::vector<Vertex>>{{}, {0}, {1}, {2}});
        CHECK(list.front().empty());

        const auto triangle = single(Graph::complete(3), false);
        CHECK(enumerate_part_cliques(triangle, 0, triangle.graph, 3, 2).size() == 8);
        CHECK(enumerate_part_cliques(triangle, 0, triangle.graph, 2, 2).size() == 7);
        CHECK(enumerate_part_cliques(triangle, 0, triangle.graph, 0, 2).size() == 1);

        const auto loops = single(Graph(3), true);
        const Graph h = apply_pattern(loops);
        CHECK(enumerate_part_cliques(loops, 0, h, 4, 0).size() == 8);
        CHECK_THROWS_AS(enumerate_part_cliques(loops, 0, h, 3, 0), PreconditionError);
        CHECK_THROWS_AS(enumerate_part_cliques(loops, 1, h, 2, 0), std::out_of_range);
    }

    TEST_CASE("part clique lists match subset enumeration, n <= 12")
    {
        Rng rng(21);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + rng.below(12);
            const std::size_t k = 1 + rng.below(3);
            const std::size_t d = rng.below(3);
            const auto pg = oracle::random_partitioned(n, k, d, rng);
            const Graph h = apply_pattern(pg);
            for (Node u = 0; u < k; ++u) {
                const auto members = pg.part(u).members();
                const std::size_t cap = 1 + rng.below(5);
                const bool allowed = !pg.pattern.has_loop(u) || members.size() <= (d + 1) * (cap - 1);
                if (!allowed) {
                    CHECK_THROWS_AS(enumerate_part_cliques(pg, u, h, cap, d), PreconditionError);
                    continue;
                }
                const auto list = enumerate_part_cliques(pg, u, h, cap, d);
                CHECK(list.size() == as_sorted(list).size());
                CHECK(as_sorted(list) == as_sorted(oracle::cliques_by_subsets(h, members, cap)));
                if (!pg.pattern.has_loop(u))
                    CHECK(list.size() <= 1 + members.size() * (std::size_t{1} << d));
            }
        }
    }

    TEST_CASE("find_clique agrees with exhaustive search")
    {
        Rng rng(33);
        for (int t = 0; t < 250; ++t) {
            const std::size_t n = 1 + rng.below(15);
            const std::size_t d = rng.below(3);
            const auto pg = oracle::random_partitioned(n, 1 + rng.below(3), d, rng);
            const Graph h = apply_pattern(pg);
            for (std::size_t k = 1; k <= n + 1; ++k) {
                const auto found = find_clique({k, pg, d});
                CHECK(found.has_value() == oracle::has_clique_bruteforce(h, k));
                if (found) {
                    CHECK(found->count() == k);
                    CHECK(oracle::is_clique_naive(h, found->members()));
                }
            }
        }
    }

    TEST_CASE("reduction instances")
    {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const std::vector<std::size_t> sizes{2, 2, 2, 2};
            const auto kp = gen_kpartite(sizes, 0.7, seed);
            const auto inst = gen_multicolored_reduction(kp, seed);
            const auto found = find_clique({10, inst.pg, 2});
            CHECK(found.has_value() == oracle::has_multicolored_clique(kp));
        }
    }

    TEST_CASE("witness does not depend on the thread count")
    {
        Rng rng(8);
        for (int t = 0; t < 20; ++t) {
            const auto pg = oracle::random_partitioned(40, 3, 2, rng);
            set_thread_count(1);
            const auto one = find_clique({4, pg, 2});
            set_thread_count(3);
            const auto three = find_clique({4, pg, 2});
            set_thread_count(0);
            CHECK(one == three);
        }
    }

    TEST_CASE("query validation")
    {
        const auto pg = single(Graph::complete(4), false);
        CHECK_THROWS_AS(find_clique({0, pg, 3}), std::invalid_argument);
        CHECK_THROWS_AS(find_clique({2, pg, 2}), PreconditionError);
        try {
            find_clique({2, pg, 1});
        } catch (const PreconditionError &e) {
            CHECK(e.bound() == "degeneracy <= d");
        }
        auto bad = pg;
        bad.assignment.pop_back();
        CHECK_THROWS_AS(find_clique({2, bad, 3}), std::invalid_argument);
        CHECK(is_clique(pg.graph, VertexSet::full(4)));
        CHECK_FALSE(is_clique(Graph(4), VertexSet::of(4, {1, 2})));
        CHECK(is_clique(Graph(4), VertexSet::of(4, {1})));
    }
}
