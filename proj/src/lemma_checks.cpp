#include "graphrecover/lemma_checks.hpp"

#include "graphrecover/errors.hpp"
#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/parallel.hpp"
#include "graphrecover/similarity.hpp"

#include <algorithm>
#include <string>

namespace graphrecover {

namespace {

std::size_t resolve_d(const PartitionedGraph &pg, std::optional<std::size_t> d)
{
    const std::size_t actual = degeneracy(pg.graph).value;
    if (!d)
        return actual;
    if (*d < actual)
        throw PreconditionError("degeneracy <= d", "graph is " + std::to_string(actual) +
                                                       "-degenerate, more than the given d = " +
                                                       std::to_string(*d));
    return *d;
}

} // namespace

InFractReport check_lemma_infract(const PartitionedGraph &pg, std::optional<std::size_t> d)
{
    pg.validate();
    InFractReport report;
    report.d = resolve_d(pg, d);
    report.K = pg.pattern.size();
    report.threshold = bounds::infract_perfect(report.d, report.K);
    const auto sizes = pg.part_sizes();
    report.max_part = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());

    const Graph h = apply_pattern(pg);
    const auto sets = perfect_sets(pg.pattern, pg.assignment);
    const VertexSet everything = VertexSet::full(h.order());
    std::vector<std::uint8_t> perfect(h.order(), 0);
    parallel_for(0, h.order(), [&](std::size_t v) {
        const auto x = static_cast<Vertex>(v);
        perfect[v] = set_distance(h, everything, x, sets[pg.assignment[v]]) <= report.threshold ? 1 : 0;
    });

    const std::size_t k10 = 10 * report.K;
    report.parts.resize(report.K);
    for (Node u = 0; u < report.K; ++u) {
        auto &p = report.parts[u];
        p.node = u;
        p.size = sizes[u];
        p.eligible = 4 * report.K * p.size >= report.max_part;
        p.required = ((k10 - 1) * p.size + k10 - 1) / k10;
    }
    for (std::size_t v = 0; v < h.order(); ++v)
        report.parts[pg.assignment[v]].perfect += perfect[v];
    for (auto &p : report.parts) {
        p.pass = !p.eligible || p.perfect * k10 >= (k10 - 1) * p.size;
        report.pass = report.pass && p.pass;
    }
    return report;
}

OutConstReport check_lemma_outconst(const PartitionedGraph &pg, const std::vector<VertexSet> &samples,
                                    std::optional<std::size_t> d)
{
    pg.validate();
    OutConstReport report;
    report.d = resolve_d(pg, d);
    report.K = pg.pattern.size();
    report.similarity_threshold = bounds::similarity(report.d, report.K);
    report.outside_bound = bounds::outconst_outside(report.d, report.K);
    const std::size_t part_bound = bounds::outconst_part(report.d, report.K);
    const auto sizes = pg.part_sizes();
    for (Node u = 0; u < sizes.size(); ++u)
        if (sizes[u] < part_bound)
            throw PreconditionError("|V_u| >= 330dK^3",
                                    "part " + std::to_string(u) + " has " + std::to_string(sizes[u]) +
                                        " vertices, below 330dK^3 = " + std::to_string(part_bound));

    const Graph h = apply_pattern(pg);
    const VertexSet everything = VertexSet::full(h.order());
    std::vector<std::uint8_t> similar(h.order());
    for (const auto &x : samples) {
        parallel_for(0, h.order(), [&](std::size_t v) {
            similar[v] = set_distance(h, everything, static_cast<Vertex>(v), x) <=
                                 report.similarity_threshold
                             ? 1
                             : 0;
        });
        std::vector<std::size_t> per_node(report.K, 0);
        OutConstSample s;
        for (std::size_t v = 0; v < h.order(); ++v)
            if (similar[v] != 0) {
                ++per_node[pg.assignment[v]];
                ++s.similar;
            }
        for (Node u = 0; u < report.K; ++u)
            if (per_node[u] > s.captured) {
                s.captured = per_node[u];
                s.best_node = u;
            }
        s.outside = s.similar - s.captured;
        s.pass = s.outside <= report.outside_bound;
        report.pass = report.pass && s.pass;
        report.samples.push_back(s);
    }
    return report;
}

std::vector<VertexSet> outconst_samples(const PartitionedGraph &pg, std::size_t count, std::size_t d,
                                        std::uint64_t seed)
{
    pg.validate();
    const std::size_t n = pg.graph.order();
    const auto perfect = perfect_sets(pg.pattern, pg.assignment);
    const auto parts = pg.parts();
    const std::size_t noise = bounds::infract_perfect(d, pg.pattern.size());
    Rng rng(seed);
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < count && i < perfect.size(); ++i)
        out.push_back(perfect[i]);
    while (out.size() < count) {
        VertexSet x(n);
        for (const auto &p : parts)
            if (rng.coin())
                x |= p;
        if (n > 0) {
            const std::size_t flips = static_cast<std::size_t>(rng.below(noise + 1));
            for (std::size_t f = 0; f < flips; ++f)
                x.toggle(static_cast<Vertex>(rng.below(n)));
        }
        out.push_back(std::move(x));
    }
    return out;
}

MaxDegreeReport check_lemma_maxdeg(const PartitionedGraph &pg, std::optional<std::size_t> d)
{
    pg.validate();
    MaxDegreeReport report;
    report.d = resolve_d(pg, d);
    report.K = pg.pattern.size();
    const std::size_t n_bound = bounds::loop(report.d, report.K);
    if (pg.graph.order() < n_bound)
        throw PreconditionError("n >= 1100dK^5", "graph has " + std::to_string(pg.graph.order()) +
                                                     " vertices, below 1100dK^5 = " +
                                                     std::to_string(n_bound));
    report.similarity_threshold = bounds::similarity(report.d, report.K);
    report.perfect_bound = bounds::maxdeg_perfect(report.d, report.K);

    const Graph h = apply_pattern(pg);
    const auto top = max_similarity_degree(h, VertexSet::full(h.order()), report.similarity_threshold);
    report.vertex = top.vertex;
    report.similarity_degree = top.degree;
    const auto perf = perfectness(pg, h, top.vertex);
    report.best_node = perf.best_node;
    report.distance = perf.distance;
    report.pass = perf.distance <= report.perfect_bound;
    return report;
}

} // namespace graphrecover
