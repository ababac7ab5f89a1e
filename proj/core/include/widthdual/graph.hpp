#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "widthdual/subset.hpp"

namespace widthdual {

/// A simple undirected graph on vertices 0..n-1. Edges keep their input
/// order, which fixes the edge-index ground set used by treewidth and
/// branchwidth.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  /// Rejects out-of-range endpoints, self-loops and parallel edges.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge indices incident with v.
  Subset incident_edges(int v) const;
  /// Neighbours of v as a vertex mask.
  Subset neighbourhood(int v) const;

  bool is_connected() const;
  /// Every component is a star or an isolated vertex.
  bool is_union_of_stars() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Edge-list text: "u v" per line, "c" comment lines, optional "p <n> <m>"
/// header. Errors carry 1-based line numbers.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Inverse of parse_graph: header line then one edge per line.
std::string serialize_graph(const Graph& g);
/// Stable FNV-1a digest of the serialized graph, "fnv1a:<hex>".
std::string graph_hash(const Graph& g);

}  // namespace widthdual
