#include "graphrecover/cliques.hpp"

#include "graphrecover/errors.hpp"
#include "graphrecover/graph_algorithms.hpp"
#include "graphrecover/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace graphrecover {

void CliqueQuery::validate() const
{
    if (k == 0)
        throw std::invalid_argument("clique size k must be at least 1");
    pg.validate();
    const std::size_t actual = degeneracy(pg.graph).value;
    if (actual > d)
        throw PreconditionError("degeneracy <= d", "witness graph is " + std::to_string(actual) +
                                                       "-degenerate, more than d = " + std::to_string(d));
}

bool is_clique(const Graph &h, const VertexSet &s)
{
    if (s.universe() != h.order())
        return false;
    const auto members = s.members();
    for (Vertex v : members) {
        const auto row = h.row(v);
        const auto w = s.words();
        for (std::size_t i = 0; i < row.size(); ++i) {
            Word missing = w[i] & ~row[i];
            if (v / bits_per_word == i)
                missing &= ~(Word{1} << (v % bits_per_word));
            if (missing != 0)
                return false;
        }
    }
    return true;
}

namespace {

std::size_t small_loop_limit(std::size_t d, std::size_t cap_k)
{
    return cap_k == 0 ? 0 : (d + 1) * (cap_k - 1);
}

void extend_cliques(const Graph &h, std::size_t n, std::vector<Vertex> &current,
                    std::span<const Vertex> candidates, std::size_t cap, std::vector<VertexSet> &out)
{
    if (current.size() >= cap)
        return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Vertex x = candidates[i];
        bool joins = true;
        for (Vertex y : current)
            joins = joins && h.adjacent(x, y);
        if (!joins)
            continue;
        current.push_back(x);
        out.push_back(VertexSet::of(n, current));
        extend_cliques(h, n, current, candidates.subspan(i + 1), cap, out);
        current.pop_back();
    }
}

} // namespace

std::vector<VertexSet> enumerate_part_cliques(const PartitionedGraph &pg, Node u, const Graph &h,
                                              std::size_t cap_k, std::size_t d)
{
    pg.validate();
    if (u >= pg.pattern.size())
        throw std::out_of_range("node " + std::to_string(u) + " out of range");
    if (h.order() != pg.graph.order())
        throw std::invalid_argument("h and the witness graph differ in order");
    const std::size_t n = h.order();
    const VertexSet part = pg.part(u);
    const auto members = part.members();
    const bool loop = pg.pattern.has_loop(u);
    if (loop && members.size() > small_loop_limit(d, cap_k) && cap_k > 0)
        throw PreconditionError("|V_u| <= (d+1)(k-1)",
                                "loop part " + std::to_string(u) + " has " + std::to_string(members.size()) +
                                    " vertices, above (d+1)(k-1) = " +
                                    std::to_string(small_loop_limit(d, cap_k)));

    std::vector<VertexSet> out;
    out.emplace_back(n);
    if (cap_k == 0 || members.empty())
        return out;

    std::vector<Vertex> current;
    std::size_t bound = 0;
    if (loop) {
        extend_cliques(h, n, current, members, cap_k, out);
        bound = members.size() >= 63 ? ~std::size_t{0} : std::size_t{1} << members.size();
    } else {
        // Each clique is its earliest vertex in peeling order plus some of
        // that vertex's at most d later neighbours.
        const auto sub = induced_subgraph(h, part);
        const auto order = degeneracy(sub.graph);
        if (order.value > d)
            throw PreconditionError("degeneracy <= d", "part " + std::to_string(u) + " is " +
                                                           std::to_string(order.value) + "-degenerate");
        std::vector<std::size_t> position(members.size());
        for (std::size_t i = 0; i < order.elimination_order.size(); ++i)
            position[order.elimination_order[i]] = i;
        std::vector<Vertex> later;
        for (Vertex local : order.elimination_order) {
            later.clear();
            sub.graph.neighborhood(local).for_each([&](Vertex y) {
                if (position[y] > position[local])
                    later.push_back(sub.original[y]);
            });
            std::sort(later.begin(), later.end());
            current.assign(1, sub.original[local]);
            out.push_back(VertexSet::of(n, current));
            extend_cliques(h, n, current, later, cap_k, out);
        }
        bound = d >= 62 ? ~std::size_t{0} : 1 + members.size() * (std::size_t{1} << d);
    }
    if (out.size() > bound)
        throw std::logic_error("part " + std::to_string(u) + " produced " + std::to_string(out.size()) +
                               " cliques, above the bound " + std::to_string(bound));
    return out;
}

namespace {

struct Option {
    VertexSet members;
    /// Common H-neighbourhood of the members (everything for ∅).
    VertexSet common;
    std::size_t size = 0;
};

class ProductSearch {
public:
    ProductSearch(std::vector<std::vector<Option>> levels, std::size_t n)
        : levels_(std::move(levels)), n_(n), suffix_max_(levels_.size() + 1, 0)
    {
        for (std::size_t i = levels_.size(); i-- > 0;) {
            std::size_t best = 0;
            for (const auto &o : levels_[i])
                best = std::max(best, o.size);
            suffix_max_[i] = suffix_max_[i + 1] + best;
        }
    }

    std::optional<VertexSet> run(std::size_t k)
    {
        if (levels_.empty() || suffix_max_[0] < k)
            return std::nullopt;
        const auto &first = levels_[0];
        std::atomic<std::size_t> best{first.size()};
        std::vector<std::vector<std::size_t>> paths(first.size());
        parallel_for(0, first.size(), [&](std::size_t i) {
            if (i >= best.load(std::memory_order_relaxed))
                return;
            const Option &o = first[i];
            if (o.size > k)
                return;
            std::vector<std::size_t> path{i};
            if (!dfs(1, k - o.size, o.common, path, i, best))
                return;
            paths[i] = std::move(path);
            std::size_t seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
        });
        const std::size_t winner = best.load();
        if (winner == first.size())
            return std::nullopt;
        VertexSet clique(n_);
        for (std::size_t level = 0; level < paths[winner].size(); ++level)
            clique |= levels_[level][paths[winner][level]].members;
        return clique;
    }

private:
    bool dfs(std::size_t level, std::size_t remaining, const VertexSet &common, std::vector<std::size_t> &path,
             std::size_t root, const std::atomic<std::size_t> &best) const
    {
        if (remaining == 0)
            return true;
        if (level == levels_.size() || suffix_max_[level] < remaining)
            return false;
        if (best.load(std::memory_order_relaxed) < root)
            return false;
        const auto &options = levels_[level];
        for (std::size_t i = 0; i < options.size(); ++i) {
            const Option &o = options[i];
            if (o.size > remaining || !o.members.is_subset_of(common))
                continue;
            path.push_back(i);
            if (dfs(level + 1, remaining - o.size, common & o.common, path, root, best))
                return true;
            path.pop_back();
        }
        return false;
    }

    std::vector<std::vector<Option>> levels_;
    std::size_t n_;
    std::vector<std::size_t> suffix_max_;
};

std::vector<Vertex> largest_colour_class(const Graph &g, const VertexSet &part, std::size_t d)
{
    // Smallest-last greedy colouring: each vertex sees at most d coloured
    // neighbours when it is coloured.
    const auto sub = induced_subgraph(g, part);
    const auto order = degeneracy(sub.graph);
    const std::size_t m = sub.original.size();
    std::vector<std::size_t> colour(m, ~std::size_t{0});
    std::vector<std::vector<Vertex>> classes(d + 1);
    std::vector<bool> used(d + 2);
    for (std::size_t i = m; i-- > 0;) {
        const Vertex v = order.elimination_order[i];
        std::fill(used.begin(), used.end(), false);
        sub.graph.neighborhood(v).for_each([&](Vertex y) {
            if (colour[y] < used.size())
                used[colour[y]] = true;
        });
        std::size_t c = 0;
        while (used[c])
            ++c;
        if (c > d)
            throw std::logic_error("greedy colouring needed more than d+1 colours");
        colour[v] = c;
        classes[c].push_back(sub.original[v]);
    }
    auto best = std::max_element(classes.begin(), classes.end(),
                                 [](const auto &a, const auto &b) { return a.size() < b.size(); });
    std::sort(best->begin(), best->end());
    return *best;
}

} // namespace

CliqueSearch find_clique_detailed(const CliqueQuery &q)
{
    q.validate();
    const Graph h = apply_pattern(q.pg);
    const std::size_t n = h.order();
    const std::size_t nodes = q.pg.pattern.size();
    const auto parts = q.pg.parts();
    CliqueSearch result;

    auto accept = [&](VertexSet s) {
        if (s.count() != q.k || !is_clique(h, s))
            throw std::logic_error("clique search produced a set that is not a " + std::to_string(q.k) +
                                   "-clique");
        result.clique = std::move(s);
    };

    for (Node u = 0; u < nodes; ++u) {
        if (!q.pg.pattern.has_loop(u) || parts[u].count() <= small_loop_limit(q.d, q.k))
            continue;
        result.branch = CliqueBranch::large_loop_part;
        result.node = u;
        auto independent = largest_colour_class(q.pg.graph, parts[u], q.d);
        independent.resize(q.k);
        accept(VertexSet::of(n, independent));
        return result;
    }

    if (q.k > n)
        return result;
    std::vector<std::vector<Option>> levels;
    result.part_clique_counts.resize(nodes);
    for (Node u = 0; u < nodes; ++u) {
        auto cliques = enumerate_part_cliques(q.pg, u, h, q.k, q.d);
        result.part_clique_counts[u] = cliques.size();
        if (parts[u].empty())
            continue;
        std::vector<Option> options;
        options.reserve(cliques.size());
        for (auto &c : cliques) {
            Option o{std::move(c), VertexSet::full(n), 0};
            o.size = o.members.count();
            o.members.for_each([&](Vertex v) {
                auto row = o.common.words();
                const auto nb = h.row(v);
                for (std::size_t i = 0; i < row.size(); ++i)
                    row[i] &= nb[i];
            });
            options.push_back(std::move(o));
        }
        levels.push_back(std::move(options));
    }
    if (auto found = ProductSearch(std::move(levels), n).run(q.k))
        accept(std::move(*found));
    return result;
}

} // namespace graphrecover
