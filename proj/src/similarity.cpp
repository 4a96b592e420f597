#include "graphrecover/similarity.hpp"

#include "graphrecover/parallel.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace graphrecover {

namespace {

void require_universe(const Graph &h, const VertexSet &w)
{
    if (w.universe() != h.order())
        throw std::invalid_argument("vertex set universe " + std::to_string(w.universe()) +
                                    " != graph order " + std::to_string(h.order()));
}

void require_member(const VertexSet &w, Vertex v)
{
    if (v >= w.universe() || !w.contains(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the vertex set");
}

std::size_t raw_row_distance(const Graph &h, const VertexSet &w, Vertex a, Vertex b)
{
    if (h.words_per_row() == 0)
        return 0;
    return simd::popcount_xor_and(h.row(a), h.row(b), w.words());
}

using Signed = long long;

Signed clamp_signed(std::size_t k)
{
    return static_cast<Signed>(std::min<std::size_t>(k, std::numeric_limits<Signed>::max() / 4));
}

} // namespace

std::size_t vertex_distance(const Graph &h, const VertexSet &w, Vertex a, Vertex b)
{
    require_universe(h, w);
    require_member(w, a);
    require_member(w, b);
    if (a == b)
        return 0;
    // Mutual adjacency contributes exactly the two masked positions.
    return raw_row_distance(h, w, a, b) - (h.adjacent(a, b) ? 2 : 0);
}

std::size_t set_distance(const Graph &h, const VertexSet &w, Vertex v, const VertexSet &x)
{
    require_universe(h, w);
    require_member(w, v);
    if (x.universe() != h.order())
        throw std::invalid_argument("set_distance: set universe mismatch");
    if (h.words_per_row() == 0)
        return 0;
    return simd::popcount_xor_and(h.row(v), x.words(), w.words()) - (x.contains(v) ? 1 : 0);
}

std::size_t similarity_degree(const Graph &h, const VertexSet &w, Vertex v, std::size_t k)
{
    require_universe(h, w);
    require_member(w, v);
    std::size_t count = 0;
    w.for_each([&](Vertex x) {
        if (x != v && vertex_distance(h, w, v, x) <= k)
            ++count;
    });
    return count;
}

std::vector<std::size_t> similarity_degrees(const Graph &h, const VertexSet &w, std::size_t k)
{
    return SimilarityIndex(h, w).degrees(k);
}

SimilarityMaximum max_similarity_degree(const Graph &h, const VertexSet &w, std::size_t k)
{
    require_universe(h, w);
    if (w.empty())
        throw std::invalid_argument("max_similarity_degree: empty vertex set");
    const auto degrees = similarity_degrees(h, w, k);
    SimilarityMaximum best{};
    bool first = true;
    w.for_each([&](Vertex v) {
        if (first || degrees[v] > best.degree) {
            best = {v, degrees[v]};
            first = false;
        }
    });
    return best;
}

SimilarityIndex::SimilarityIndex(const Graph &h, const VertexSet &w, Options options)
    : h_(&h), w_(w)
{
    require_universe(h, w);
    const std::size_t n = h.order();
    members_ = w_.members();
    restricted_degree_.assign(n, 0);
    group_of_.assign(n, no_group);
    delta_offset_.assign(n, 0);
    delta_length_.assign(n, 0);
    if (members_.empty())
        return;

    for (Vertex v : members_)
        restricted_degree_[v] = simd::popcount_and(h.row(v), w_.words());

    const std::size_t max_delta =
        options.max_delta != 0 ? options.max_delta : std::max<std::size_t>(32, h.words_per_row());

    // Greedy centre selection in ascending id order; deterministic.
    for (Vertex v : members_) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::size_t best_center = no_group;
        for (std::size_t c = 0; c < centers_.size(); ++c) {
            const std::size_t d = raw_distance(v, centers_[c]);
            if (d < best) {
                best = d;
                best_center = c;
            }
        }
        if (best_center != no_group && best <= max_delta) {
            group_of_[v] = best_center;
            delta_offset_[v] = delta_pool_.size();
            const auto rv = h.row(v);
            const auto rc = h.row(centers_[best_center]);
            const auto mask = w_.words();
            for (std::size_t i = 0; i < rv.size(); ++i) {
                Word x = (rv[i] ^ rc[i]) & mask[i];
                while (x != 0) {
                    delta_pool_.push_back(
                        static_cast<Vertex>(i * bits_per_word + static_cast<std::size_t>(std::countr_zero(x))));
                    x &= x - 1;
                }
            }
            delta_length_[v] = delta_pool_.size() - delta_offset_[v];
        } else if (centers_.size() < options.max_centers) {
            group_of_[v] = centers_.size();
            delta_offset_[v] = delta_pool_.size();
            centers_.push_back(v);
        } else {
            dense_.push_back(v);
        }
    }

    const std::size_t c = centers_.size();
    center_distance_.assign(c * c, 0);
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b)
            center_distance_[a * c + b] = center_distance_[b * c + a] = raw_distance(centers_[a], centers_[b]);

    groups_.resize(c);
    for (Vertex v : members_)
        if (group_of_[v] != no_group)
            groups_[group_of_[v]].by_size.push_back(v);
    for (auto &g : groups_) {
        std::stable_sort(g.by_size.begin(), g.by_size.end(),
                         [&](Vertex a, Vertex b) { return delta_length_[a] < delta_length_[b]; });
        g.sizes.reserve(g.by_size.size());
        for (Vertex v : g.by_size)
            g.sizes.push_back(delta_length_[v]);
    }
}

std::size_t SimilarityIndex::raw_distance(Vertex a, Vertex b) const
{
    return raw_row_distance(*h_, w_, a, b);
}

std::size_t SimilarityIndex::exact_distance(Vertex a, Vertex b) const
{
    std::size_t raw;
    if (group_of_[a] != no_group && group_of_[a] == group_of_[b]) {
        const Vertex *pa = delta_pool_.data() + delta_offset_[a];
        const Vertex *pb = delta_pool_.data() + delta_offset_[b];
        const Vertex *ea = pa + delta_length_[a];
        const Vertex *eb = pb + delta_length_[b];
        std::size_t common = 0;
        while (pa != ea && pb != eb) {
            if (*pa < *pb)
                ++pa;
            else if (*pb < *pa)
                ++pb;
            else {
                ++common;
                ++pa;
                ++pb;
            }
        }
        raw = delta_length_[a] + delta_length_[b] - 2 * common;
    } else {
        raw = raw_distance(a, b);
    }
    return raw - (h_->adjacent(a, b) ? 2 : 0);
}

std::size_t SimilarityIndex::count_dense_side(Vertex v, std::size_t k,
                                              const std::vector<Vertex> &others) const
{
    const Signed kk = clamp_signed(k);
    const Signed dv = static_cast<Signed>(restricted_degree_[v]);
    std::size_t count = 0;
    for (Vertex x : others) {
        if (x == v)
            continue;
        // |deg(v) - deg(x)| bounds the raw distance from below.
        const Signed gap = dv - static_cast<Signed>(restricted_degree_[x]);
        if ((gap < 0 ? -gap : gap) - 2 > kk)
            continue;
        if (exact_distance(v, x) <= k)
            ++count;
    }
    return count;
}

std::size_t SimilarityIndex::degree(Vertex v, std::size_t k) const
{
    require_member(w_, v);
    const std::size_t g = group_of_[v];
    if (g == no_group)
        return count_dense_side(v, k, members_);

    const Signed kk = clamp_signed(k);
    const Signed s = static_cast<Signed>(delta_length_[v]);
    const std::size_t c = centers_.size();
    std::size_t count = 0;
    for (std::size_t j = 0; j < c; ++j) {
        const Group &grp = groups_[j];
        if (grp.by_size.empty())
            continue;
        const Signed dcc = static_cast<Signed>(center_distance_[g * c + j]);
        const auto sizes_begin = grp.sizes.begin();

        // raw <= s + s' + dcc, so these are similar outright.
        const Signed accept_max = kk - s - dcc;
        std::size_t accepted = 0;
        if (accept_max >= 0) {
            accepted = static_cast<std::size_t>(
                std::upper_bound(sizes_begin, grp.sizes.end(), static_cast<std::size_t>(accept_max)) -
                sizes_begin);
            count += accepted;
            if (j == g && s <= accept_max)
                --count;
        }

        // Outside [lo, hi] the triangle bound rules the pair out.
        const Signed lo = std::max<Signed>({0, dcc - s - kk - 2, s - dcc - kk - 2});
        const Signed hi = s + dcc + kk + 2;
        std::size_t begin = static_cast<std::size_t>(
            std::lower_bound(sizes_begin, grp.sizes.end(), static_cast<std::size_t>(lo)) - sizes_begin);
        begin = std::max(begin, accepted);
        const std::size_t end = static_cast<std::size_t>(
            std::upper_bound(sizes_begin, grp.sizes.end(), static_cast<std::size_t>(hi)) - sizes_begin);
        for (std::size_t i = begin; i < end; ++i) {
            const Vertex x = grp.by_size[i];
            if (x != v && exact_distance(v, x) <= k)
                ++count;
        }
    }
    return count + count_dense_side(v, k, dense_);
}

std::vector<std::size_t> SimilarityIndex::degrees(std::size_t k) const
{
    std::vector<std::size_t> out(h_->order(), 0);
    parallel_for(0, members_.size(), [&](std::size_t i) { out[members_[i]] = degree(members_[i], k); });
    return out;
}

VertexSet u_perfect_set(const PartitionedGraph &pg, Node u)
{
    if (u >= pg.pattern.size())
        throw std::out_of_range("node " + std::to_string(u) + " outside pattern of size " +
                                std::to_string(pg.pattern.size()));
    VertexSet out(pg.graph.order());
    for (std::size_t v = 0; v < pg.assignment.size(); ++v)
        if (pg.pattern.adjacent(u, pg.assignment[v]))
            out.insert(static_cast<Vertex>(v));
    return out;
}

PerfectnessReport perfectness(const PartitionedGraph &pg, const Graph &h, Vertex v)
{
    pg.validate();
    if (h.order() != pg.graph.order())
        throw std::invalid_argument("perfectness: graph order " + std::to_string(h.order()) +
                                    " != partitioned graph order " + std::to_string(pg.graph.order()));
    if (v >= h.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside graph");
    const auto sets = perfect_sets(pg.pattern, pg.assignment);
    const VertexSet everything = VertexSet::full(h.order());
    PerfectnessReport report;
    report.vertex = v;
    report.node_distances.reserve(sets.size());
    for (Node u = 0; u < sets.size(); ++u) {
        const std::size_t d = set_distance(h, everything, v, sets[u]);
        report.node_distances.push_back(d);
        if (u == 0 || d < report.distance) {
            report.distance = d;
            report.best_node = u;
        }
    }
    return report;
}

} // namespace graphrecover
