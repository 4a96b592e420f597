#pragma once

#include "graphrecover/graph.hpp"

#include <vector>

namespace graphrecover {

struct Degeneracy {
    std::size_t value = 0;
    /// Peeling order. Each vertex has at most `value` neighbours later in
    /// this order; reversed, it is a witness ordering with at most `value`
    /// earlier neighbours per vertex.
    std::vector<Vertex> elimination_order;
};

/// Bucketed minimum-degree peeling, O(n + m) after building degree lists.
Degeneracy degeneracy(const Graph &g);

/// Twin classes (N(v) \ {v'} = N(v') \ {v}), each sorted, ordered by their
/// smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Graph &g);

/// Edge-set symmetric difference. Throws std::invalid_argument on order
/// mismatch.
Graph graph_symmetric_difference(const Graph &a, const Graph &b);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the id in the parent graph of vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &w);

/// Vertices whose incident edge sets differ between a and b. Deleting them
/// makes the graphs equal, and each of them is an endpoint of a differing
/// pair. (A smaller deletion set can exist: one endpoint per differing pair
/// already suffices.)
VertexSet disagreement_vertices(const Graph &a, const Graph &b);

} // namespace graphrecover
