#include "graphrecover/generators.hpp"

#include "graphrecover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace graphrecover {

Graph gen_degenerate(std::size_t n, std::size_t d, std::uint64_t seed)
{
    Rng rng(seed);
    GraphBuilder b(n);
    std::vector<Vertex> picked;
    for (Vertex i = 0; i < n; ++i) {
        const std::size_t cap = std::min<std::size_t>(d, i);
        const std::size_t c = static_cast<std::size_t>(rng.below(cap + 1));
        picked.clear();
        while (picked.size() < c) {
            const auto w = static_cast<Vertex>(rng.below(i));
            if (std::find(picked.begin(), picked.end(), w) == picked.end())
                picked.push_back(w);
        }
        for (Vertex w : picked)
            b.add_edge(i, w);
    }
    return std::move(b).build();
}

Pattern alternating_loop_path(std::size_t node_count)
{
    Pattern p(node_count);
    for (Node u = 0; u < node_count; ++u) {
        p.set_loop(u, u % 2 == 0);
        if (u + 1 < node_count)
            p.set_edge(u, u + 1);
    }
    return p;
}

Pattern random_pattern(std::size_t node_count, Rng &rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Pattern p(node_count);
        for (Node u = 0; u < node_count; ++u) {
            p.set_loop(u, rng.coin());
            for (Node v = u + 1; v < node_count; ++v)
                p.set_edge(u, v, rng.coin());
        }
        if (is_pattern(p))
            return p;
    }
    return alternating_loop_path(node_count);
}

PatternedInstance gen_planted(std::size_t n, std::size_t d, std::size_t K, std::uint64_t seed,
                              const PlantedOptions &options)
{
    if (!options.pattern && K == 0)
        throw std::invalid_argument("gen_planted: K must be at least 1");
    if (options.pattern && options.pattern->size() == 0)
        throw std::invalid_argument("gen_planted: pattern override has no nodes");

    PatternedInstance inst;
    inst.seed = seed;
    inst.d = d;
    inst.pg.graph = gen_degenerate(n, d, seed);

    // Pattern and assignment draw from a second stream so the graph alone
    // is always gen_degenerate(n, d, seed).
    std::uint64_t mix = seed ^ 0x5bd1e9955bd1e995ULL;
    Rng rng(Rng::splitmix64(mix));
    inst.pg.pattern = options.pattern ? *options.pattern : random_pattern(K, rng);
    const std::size_t k = inst.pg.pattern.size();
    inst.K = k;

    std::vector<double> cumulative(k);
    double total = 0;
    for (std::size_t u = 0; u < k; ++u) {
        total += options.skew > 0 ? std::exp(-options.skew * static_cast<double>(u)) : 1.0;
        cumulative[u] = total;
    }
    inst.pg.assignment.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (options.skew > 0) {
            const double x = rng.unit() * total;
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
            inst.pg.assignment[v] =
                static_cast<Node>(std::min<std::ptrdiff_t>(it - cumulative.begin(), static_cast<std::ptrdiff_t>(k) - 1));
        } else {
            inst.pg.assignment[v] = static_cast<Node>(rng.below(k));
        }
    }
    inst.H = apply_pattern(inst.pg);
    return inst;
}

KPartiteGraph gen_kpartite(std::span<const std::size_t> part_sizes, double p, std::uint64_t seed)
{
    KPartiteGraph out;
    out.parts = part_sizes.size();
    for (std::size_t i = 0; i < part_sizes.size(); ++i)
        out.part.insert(out.part.end(), part_sizes[i], static_cast<Node>(i));
    const std::size_t n = out.part.size();
    Rng rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (out.part[u] != out.part[v] && rng.unit() < p)
                b.add_edge(u, v);
    out.graph = std::move(b).build();
    return out;
}

PatternedInstance gen_multicolored_reduction(const KPartiteGraph &input, std::uint64_t seed)
{
    const std::size_t k = input.parts;
    if (k < 4)
        throw PreconditionError("k >= 4", "multicoloured clique reduction needs k >= 4 parts, got " +
                                              std::to_string(k));
    const Graph &g = input.graph;
    if (input.part.size() != g.order())
        throw std::invalid_argument("part labelling covers " + std::to_string(input.part.size()) +
                                    " vertices, graph has " + std::to_string(g.order()));
    for (Node c : input.part)
        if (c >= k)
            throw std::invalid_argument("part label " + std::to_string(c) + " out of range");

    auto pair_index = [k](std::size_t i, std::size_t j) {
        // Position of (i, j), i < j, in lexicographic order.
        return i * (2 * k - i - 1) / 2 + (j - i - 1);
    };

    const auto edges = g.edges();
    for (auto [u, v] : edges)
        if (input.part[u] == input.part[v])
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " lies inside part " + std::to_string(input.part[u]));

    const std::size_t n = g.order() + edges.size();
    PatternedInstance inst;
    inst.seed = seed;
    inst.d = 2;
    GraphBuilder b(n);
    inst.pg.assignment.assign(input.part.begin(), input.part.end());
    inst.pg.assignment.resize(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        const auto s = static_cast<Vertex>(g.order() + e);
        b.add_edge(u, s);
        b.add_edge(v, s);
        const std::size_t i = std::min(input.part[u], input.part[v]);
        const std::size_t j = std::max(input.part[u], input.part[v]);
        inst.pg.assignment[s] = static_cast<Node>(k + pair_index(i, j));
    }
    inst.pg.graph = std::move(b).build();

    const std::size_t nodes = k + k * (k - 1) / 2;
    Pattern p(nodes);
    for (Node a = 0; a < nodes; ++a)
        for (Node c = a + 1; c < nodes; ++c)
            p.set_edge(a, c);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto uij = static_cast<Node>(k + pair_index(i, j));
            p.set_edge(static_cast<Node>(i), uij, false);
            p.set_edge(static_cast<Node>(j), uij, false);
        }
    inst.pg.pattern = std::move(p);
    inst.K = nodes;
    inst.H = apply_pattern(inst.pg);
    return inst;
}

} // namespace graphrecover
