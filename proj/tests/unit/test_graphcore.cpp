#include "graphrecover/generators.hpp"
#include "graphrecover/graph_algorithms.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace graphrecover;

namespace {

Graph path(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

bool is_witness_order(const Graph &g, const Degeneracy &d)
{
    // Reversed, every vertex has at most d.value earlier neighbours.
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < d.elimination_order.size(); ++i)
        pos[d.elimination_order[i]] = i;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t later = 0;
        for (Vertex x = 0; x < g.order(); ++x)
            later += (g.adjacent(v, x) && pos[x] > pos[v]) ? 1 : 0;
        if (later > d.value)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("graphcore")
{
    TEST_CASE("builder keeps rows symmetric and rejects loops and out-of-range vertices")
    {
        GraphBuilder b(5);
        b.add_edge(0, 3);
        b.add_edge(4, 1);
        b.toggle_edge(2, 3);
        b.toggle_edge(2, 3);
        CHECK_THROWS_AS(b.add_edge(2, 2), std::invalid_argument);
        CHECK_THROWS_AS(b.add_edge(0, 5), std::out_of_range);
        const Graph g = std::move(b).build();
        CHECK(is_well_formed(g));
        CHECK(g.edge_count() == 2);
        CHECK(g.adjacent(3, 0));
        CHECK(g.adjacent(1, 4));
        CHECK_FALSE(g.adjacent(2, 3));
        CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 4}});
        CHECK(g.complement().edge_count() == 8);
        CHECK(Graph::complete(5) == Graph(5).complement());
    }

    TEST_CASE("degeneracy examples")
    {
        CHECK(degeneracy(path(5)).value == 1);
        CHECK(degeneracy(Graph::complete(5)).value == 4);
        CHECK(degeneracy(Graph(0)).value == 0);
        CHECK(degeneracy(Graph(7)).value == 0);
    }

    TEST_CASE("degeneracy equals the minimum over all orderings for n <= 8")
    {
        Rng rng(2024);
        for (int t = 0; t < 120; ++t) {
            const std::size_t n = 1 + rng.below(8);
            const Graph g = oracle::random_graph(n, rng.unit(), rng);
            const auto d = degeneracy(g);
            CHECK(d.value == oracle::degeneracy_bruteforce(g));
            CHECK(is_witness_order(g, d));
            CHECK(d.value <= g.max_degree());
        }
    }

    TEST_CASE("complement of a forest is nearly complete")
    {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const std::size_t n = 3 + seed * 3;
            const Graph f = gen_degenerate(n, 1, seed);
            const Graph c = f.complement();
            CHECK(degeneracy(c).value >= n - 1 - f.max_degree() - 1);
            CHECK(degeneracy(c).value <= c.max_degree());
        }
    }

    TEST_CASE("symmetric_difference_size")
    {
        const auto a = VertexSet::of(5, {0, 1});
        const auto b = VertexSet::of(5, {1, 2});
        CHECK(symmetric_difference_size(a, a) == 0);
        CHECK(symmetric_difference_size(a, b) == 2);
        CHECK_THROWS_AS(symmetric_difference_size(a, VertexSet(6)), std::invalid_argument);
        Rng rng(5);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + rng.below(64);
            const auto x = oracle::random_set(n, rng.unit(), rng);
            const auto y = oracle::random_set(n, rng.unit(), rng);
            std::size_t naive = 0;
            for (Vertex v = 0; v < n; ++v)
                naive += x.contains(v) != y.contains(v) ? 1 : 0;
            CHECK(symmetric_difference_size(x, y) == naive);
        }
    }

    TEST_CASE("vertex sets")
    {
        auto s = VertexSet::full(70);
        CHECK(s.count() == 70);
        s.erase(69);
        s.erase(0);
        CHECK(s.count() == 68);
        CHECK(s.members().front() == 1);
        CHECK(VertexSet::from_words(3, std::vector<Word>{~Word{0}}).count() == 3);
        CHECK(VertexSet::of(10, {2, 3}).is_subset_of(VertexSet::of(10, {1, 2, 3})));
        CHECK((VertexSet::of(10, {1, 2, 3}) - VertexSet::of(10, {2})) == VertexSet::of(10, {1, 3}));
        CHECK_THROWS_AS(VertexSet(3) |= VertexSet(4), std::invalid_argument);
        CHECK(VertexSet(0).empty());
    }

    TEST_CASE("twin classes examples")
    {
        const auto empty = twin_classes(Graph(4));
        REQUIRE(empty.size() == 1);
        CHECK(empty[0] == std::vector<Vertex>{0, 1, 2, 3});
        const auto p = twin_classes(path(3));
        CHECK(p == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
        CHECK(twin_classes(Graph::complete(4)).size() == 1);
    }

    TEST_CASE("twin classes match the pairwise definition for n <= 10")
    {
        Rng rng(77);
        for (int t = 0; t < 300; ++t) {
            const std::size_t n = 1 + rng.below(10);
            const Graph g = oracle::random_graph(n, rng.unit(), rng);
            const auto classes = twin_classes(g);
            CHECK(classes == oracle::twin_classes_bruteforce(g));
            for (const auto &c : classes) {
                // Each class is a clique or an independent set.
                std::size_t inside = 0;
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j)
                        inside += g.adjacent(c[i], c[j]) ? 1 : 0;
                CHECK((inside == 0 || inside == c.size() * (c.size() - 1) / 2));
            }
        }
    }

    TEST_CASE("graph symmetric difference algebra")
    {
        Rng rng(3);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 1 + rng.below(50);
            const Graph a = oracle::random_graph(n, rng.unit(), rng);
            const Graph b = oracle::random_graph(n, rng.unit(), rng);
            const Graph c = oracle::random_graph(n, rng.unit(), rng);
            CHECK(graph_symmetric_difference(a, a) == Graph(n));
            CHECK(graph_symmetric_difference(a, Graph(n)) == a);
            CHECK(graph_symmetric_difference(graph_symmetric_difference(a, b), b) == a);
            CHECK(graph_symmetric_difference(a, b) == graph_symmetric_difference(b, a));
            CHECK(graph_symmetric_difference(graph_symmetric_difference(a, b), c) ==
                  graph_symmetric_difference(a, graph_symmetric_difference(b, c)));
            CHECK(is_well_formed(graph_symmetric_difference(a, b)));
        }
        CHECK_THROWS_AS(graph_symmetric_difference(Graph(3), Graph(4)), std::invalid_argument);
    }

    TEST_CASE("induced subgraph")
    {
        const Graph tri = Graph::complete(3);
        const auto all = induced_subgraph(tri, VertexSet::full(3));
        CHECK(all.graph == tri);
        CHECK(all.original == std::vector<Vertex>{0, 1, 2});
        CHECK(induced_subgraph(tri, VertexSet(3)).graph.order() == 0);
        const auto edge = induced_subgraph(tri, VertexSet::of(3, {0, 1}));
        CHECK(edge.graph == Graph::complete(2));

        Rng rng(8);
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 1 + rng.below(150);
            const Graph g = oracle::random_graph(n, 0.3, rng);
            const auto w = oracle::random_set(n, 0.5, rng);
            const auto sub = induced_subgraph(g, w);
            REQUIRE(sub.original == w.members());
            bool same = true;
            for (Vertex i = 0; i < sub.graph.order(); ++i)
                for (Vertex j = 0; j < sub.graph.order(); ++j)
                    if (i != j)
                        same = same && sub.graph.adjacent(i, j) == g.adjacent(sub.original[i], sub.original[j]);
            CHECK(same);
        }
    }

    TEST_CASE("disagreement vertices")
    {
        const Graph a = path(6);
        CHECK(disagreement_vertices(a, a).empty());
        GraphBuilder b(a);
        b.add_edge(1, 4);
        CHECK(disagreement_vertices(a, std::move(b).build()) == VertexSet::of(6, {1, 4}));
        CHECK_THROWS_AS(disagreement_vertices(Graph(2), Graph(3)), std::invalid_argument);
    }

    TEST_CASE("disagreement vertices are exactly what must be deleted, n <= 30")
    {
        Rng rng(31);
        for (int t = 0; t < 150; ++t) {
            const std::size_t n = 1 + rng.below(30);
            const Graph a = oracle::random_graph(n, 0.3, rng);
            GraphBuilder b(a);
            const std::size_t flips = rng.below(5);
            for (std::size_t f = 0; f < flips && n > 1; ++f) {
                const auto u = static_cast<Vertex>(rng.below(n));
                const auto v = static_cast<Vertex>(rng.below(n));
                if (u != v)
                    b.toggle_edge(u, v);
            }
            const Graph c = std::move(b).build();
            const auto s = disagreement_vertices(a, c);
            CHECK(s == oracle::disagreement_naive(a, c));
            CHECK(oracle::agree_without(a, c, s));
            // Each member is an endpoint of a differing pair.
            s.for_each([&](Vertex v) {
                bool incident = false;
                for (Vertex x = 0; x < n; ++x)
                    incident = incident || (x != v && a.adjacent(v, x) != c.adjacent(v, x));
                CHECK(incident);
            });
        }
    }

    TEST_CASE("one endpoint per differing pair can be a smaller deletion set")
    {
        const Graph a = path(6);
        GraphBuilder b(a);
        b.add_edge(1, 4);
        const Graph c = std::move(b).build();
        CHECK(disagreement_vertices(a, c).count() == 2);
        CHECK(oracle::agree_without(a, c, VertexSet::of(6, {4})));
    }

    TEST_CASE("degenerate graphs have at most d n edges")
    {
        for (std::size_t d = 0; d <= 4; ++d)
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const Graph g = gen_degenerate(300, d, seed);
                CHECK(g.edge_count() <= d * g.order());
            }
    }
}
