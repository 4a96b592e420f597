#include "graphrecover/pattern.hpp"

#include "graphrecover/graph_algorithms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace graphrecover {

void Pattern::check(Node u) const
{
    if (u >= k_)
        throw std::out_of_range("node " + std::to_string(u) + " outside pattern of size " +
                                std::to_string(k_));
}

void Pattern::set_loop(Node u, bool on)
{
    check(u);
    adj_[u * k_ + u] = on ? 1 : 0;
}

void Pattern::set_edge(Node u, Node v, bool on)
{
    check(u);
    check(v);
    if (u == v)
        throw std::invalid_argument("use set_loop for node " + std::to_string(u));
    adj_[u * k_ + v] = on ? 1 : 0;
    adj_[v * k_ + u] = on ? 1 : 0;
}

std::vector<Node> Pattern::neighbors(Node u) const
{
    check(u);
    std::vector<Node> out;
    for (Node v = 0; v < k_; ++v)
        if (adjacent(u, v))
            out.push_back(v);
    return out;
}

std::size_t Pattern::loop_count() const
{
    std::size_t c = 0;
    for (Node u = 0; u < k_; ++u)
        c += has_loop(u) ? 1 : 0;
    return c;
}

std::size_t Pattern::edge_count() const
{
    std::size_t c = 0;
    for (Node u = 0; u < k_; ++u)
        for (Node v = u + 1; v < k_; ++v)
            c += adjacent(u, v) ? 1 : 0;
    return c;
}

bool pattern_twins(const Pattern &p, Node u, Node v)
{
    for (Node w = 0; w < p.size(); ++w)
        if (w != u && w != v && p.adjacent(u, w) != p.adjacent(v, w))
            return false;
    return true;
}

bool mergeable_twins(const Pattern &p, Node u, Node v)
{
    if (u == v || !pattern_twins(p, u, v))
        return false;
    if (p.adjacent(u, v))
        return p.has_loop(u) && p.has_loop(v);
    return !p.has_loop(u) && !p.has_loop(v);
}

std::optional<TwinConflict> find_forbidden_twins(const Pattern &p)
{
    for (Node u = 0; u < p.size(); ++u)
        for (Node v = u + 1; v < p.size(); ++v)
            if (mergeable_twins(p, u, v))
                return TwinConflict{u, v};
    return std::nullopt;
}

void PartitionedGraph::validate() const
{
    if (assignment.size() != graph.order())
        throw std::invalid_argument("partition assigns " + std::to_string(assignment.size()) +
                                    " vertices but the graph has " + std::to_string(graph.order()));
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] >= pattern.size())
            throw std::invalid_argument("vertex " + std::to_string(v) + " assigned to node " +
                                        std::to_string(assignment[v]) + " of a " +
                                        std::to_string(pattern.size()) + "-node pattern");
}

VertexSet PartitionedGraph::part(Node u) const
{
    VertexSet s(graph.order());
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] == u)
            s.insert(static_cast<Vertex>(v));
    return s;
}

std::vector<VertexSet> PartitionedGraph::parts() const
{
    std::vector<VertexSet> out(pattern.size(), VertexSet(graph.order()));
    for (std::size_t v = 0; v < assignment.size(); ++v)
        out[assignment[v]].insert(static_cast<Vertex>(v));
    return out;
}

std::vector<std::size_t> PartitionedGraph::part_sizes() const
{
    std::vector<std::size_t> out(pattern.size(), 0);
    for (Node u : assignment)
        ++out[u];
    return out;
}

std::vector<VertexSet> perfect_sets(const Pattern &p, std::span<const Node> assignment)
{
    const std::size_t n = assignment.size();
    std::vector<VertexSet> parts(p.size(), VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) {
        if (assignment[v] >= p.size())
            throw std::invalid_argument("vertex " + std::to_string(v) + " assigned to unknown node " +
                                        std::to_string(assignment[v]));
        parts[assignment[v]].insert(static_cast<Vertex>(v));
    }
    std::vector<VertexSet> out(p.size(), VertexSet(n));
    for (Node u = 0; u < p.size(); ++u)
        for (Node w = 0; w < p.size(); ++w)
            if (p.adjacent(u, w))
                out[u] |= parts[w];
    return out;
}

namespace {

Graph flip_by_masks(Graph g, std::span<const Node> assignment, const std::vector<VertexSet> &masks)
{
    GraphBuilder b(std::move(g));
    for (Vertex v = 0; v < assignment.size(); ++v) {
        auto row = b.mutable_row(v);
        const auto mask = masks[assignment[v]].words();
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] ^= mask[i];
        row[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
    }
    return std::move(b).build();
}

} // namespace

Graph apply_pattern(const PartitionedGraph &pg)
{
    pg.validate();
    return flip_by_masks(pg.graph, pg.assignment, perfect_sets(pg.pattern, pg.assignment));
}

Graph perfect_blowup(const Pattern &p, std::span<const Node> assignment)
{
    return flip_by_masks(Graph(assignment.size()), assignment, perfect_sets(p, assignment));
}

NodeReduction reduce_pattern_nodes(const Pattern &p, std::span<const Node> removed)
{
    const std::size_t k = p.size();
    std::vector<bool> gone(k, false);
    for (Node u : removed) {
        if (u >= k)
            throw std::out_of_range("removed node " + std::to_string(u) + " outside pattern of size " +
                                    std::to_string(k));
        gone[u] = true;
    }

    // Surviving original nodes in ascending order; each carries its group.
    std::vector<std::vector<Node>> groups;
    std::vector<Node> reps;
    for (Node u = 0; u < k; ++u)
        if (!gone[u]) {
            groups.push_back({u});
            reps.push_back(u);
        }

    auto current = [&] {
        Pattern q(reps.size());
        for (Node a = 0; a < reps.size(); ++a) {
            q.set_loop(a, p.has_loop(reps[a]));
            for (Node b = a + 1; b < reps.size(); ++b)
                q.set_edge(a, b, p.adjacent(reps[a], reps[b]));
        }
        return q;
    };

    Pattern q = current();
    while (auto conflict = find_forbidden_twins(q)) {
        // The later group folds into the earlier one, so groups stay ordered
        // by their smallest original node.
        const Node a = conflict->first;
        const Node b = conflict->second;
        auto &dst = groups[a];
        dst.insert(dst.end(), groups[b].begin(), groups[b].end());
        std::sort(dst.begin(), dst.end());
        groups.erase(groups.begin() + b);
        reps.erase(reps.begin() + b);
        q = current();
    }

    NodeReduction out;
    out.pattern = std::move(q);
    out.node_map.assign(k, std::nullopt);
    for (Node g = 0; g < groups.size(); ++g)
        for (Node u : groups[g])
            out.node_map[u] = g;
    out.members = std::move(groups);
    return out;
}

ReducedPartition reduce_pattern(const PartitionedGraph &pg, std::span<const Node> removed)
{
    pg.validate();
    ReducedPartition out;
    out.nodes = reduce_pattern_nodes(pg.pattern, removed);

    VertexSet keep(pg.graph.order());
    for (Vertex v = 0; v < pg.assignment.size(); ++v)
        if (out.nodes.node_map[pg.assignment[v]].has_value())
            keep.insert(v);

    auto sub = induced_subgraph(pg.graph, keep);
    out.original_vertex = std::move(sub.original);
    out.pg.graph = std::move(sub.graph);
    out.pg.pattern = out.nodes.pattern;
    out.pg.assignment.reserve(out.original_vertex.size());
    for (Vertex v : out.original_vertex)
        out.pg.assignment.push_back(*out.nodes.node_map[pg.assignment[v]]);
    return out;
}

PartitionedGraph subsets_to_pattern(const Graph &g, const SubsetList &subsets)
{
    const std::size_t n = g.order();
    if (subsets.size() > 64)
        throw std::invalid_argument("subsets_to_pattern supports at most 64 subsets, got " +
                                    std::to_string(subsets.size()));
    for (const auto &s : subsets)
        if (s.universe() != n)
            throw std::invalid_argument("subset universe " + std::to_string(s.universe()) +
                                        " != graph order " + std::to_string(n));

    // Cells are the non-empty membership signatures, numbered by first vertex.
    std::vector<std::uint64_t> cell_signature;
    std::unordered_map<std::uint64_t, Node> cell_of;
    PartitionedGraph raw;
    raw.graph = g;
    raw.assignment.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t sig = 0;
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if (subsets[i].contains(v))
                sig |= std::uint64_t{1} << i;
        auto [it, inserted] = cell_of.try_emplace(sig, static_cast<Node>(cell_signature.size()));
        if (inserted)
            cell_signature.push_back(sig);
        raw.assignment[v] = it->second;
    }

    // A pair is flipped once per subset containing both endpoints.
    const std::size_t k = cell_signature.size();
    raw.pattern = Pattern(k);
    for (Node a = 0; a < k; ++a) {
        raw.pattern.set_loop(a, std::popcount(cell_signature[a]) % 2 == 1);
        for (Node b = a + 1; b < k; ++b)
            raw.pattern.set_edge(a, b, std::popcount(cell_signature[a] & cell_signature[b]) % 2 == 1);
    }

    auto reduced = reduce_pattern(raw, {});
    return std::move(reduced.pg);
}

SubsetList pattern_to_subsets(const PartitionedGraph &pg)
{
    pg.validate();
    const Pattern &p = pg.pattern;
    const auto parts = pg.parts();
    SubsetList out;
    for (Node u = 0; u < p.size(); ++u)
        for (Node v = u + 1; v < p.size(); ++v)
            if (p.adjacent(u, v)) {
                auto s = parts[u] | parts[v];
                if (!s.empty())
                    out.push_back(std::move(s));
            }
    // Each union above also flipped everything inside V_u; fix the parity.
    for (Node u = 0; u < p.size(); ++u) {
        std::size_t flips = p.has_loop(u) ? 1 : 0;
        for (Node v = 0; v < p.size(); ++v)
            if (v != u && p.adjacent(u, v))
                ++flips;
        if (flips % 2 == 1 && !parts[u].empty())
            out.push_back(parts[u]);
    }
    return out;
}

} // namespace graphrecover
