#pragma once

// Text formats. '#' lines and blank lines are ignored everywhere.
//
//   edge list   "n m", then m lines "u v" with 0 <= u < v < n
//   pattern     "K", then "loop u" and "edge u v" lines
//   partition   one "vertex node" line per vertex
//
// Writers emit a canonical form (sorted, no comments) so equal values give
// byte-identical files. Readers throw ParseError with the line number;
// unreadable files raise IoError.

#include "graphrecover/instance.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphrecover {

Graph read_edge_list(std::istream &in, const std::string &source);
void write_edge_list(std::ostream &out, const Graph &g);

Pattern read_pattern(std::istream &in, const std::string &source);
void write_pattern(std::ostream &out, const Pattern &p);

/// Every vertex 0..n-1 exactly once, node ids below node_count.
std::vector<Node> read_partition(std::istream &in, const std::string &source, std::size_t n,
                                 std::size_t node_count);
void write_partition(std::ostream &out, std::span<const Node> assignment);

Graph load_edge_list(const std::filesystem::path &path);
void save_edge_list(const std::filesystem::path &path, const Graph &g);
Pattern load_pattern(const std::filesystem::path &path);
void save_pattern(const std::filesystem::path &path, const Pattern &p);
std::vector<Node> load_partition(const std::filesystem::path &path, std::size_t n, std::size_t node_count);
void save_partition(const std::filesystem::path &path, std::span<const Node> assignment);

/// PREFIX.graph, PREFIX.pattern, PREFIX.partition and PREFIX.applied.
struct InstancePaths {
    std::filesystem::path graph;
    std::filesystem::path pattern;
    std::filesystem::path partition;
    std::filesystem::path applied;

    static InstancePaths from_prefix(const std::string &prefix);
};

void save_instance(const std::string &prefix, const PatternedInstance &inst);

/// Reads graph, pattern and partition, and recomputes H. When the applied
/// file exists it must match H exactly (ParseError otherwise). seed, d and
/// K are not stored: d is set to degeneracy(G), K to the pattern size.
PatternedInstance load_instance(const std::string &prefix);

} // namespace graphrecover
