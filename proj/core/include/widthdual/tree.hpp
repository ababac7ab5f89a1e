#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "widthdual/family.hpp"

namespace widthdual {

/// A partial partitioning tree: an unrooted tree whose leaves carry the
/// blocks of a partition of the ground set (the displayed partition) and
/// whose internal nodes have degree at least three.
///
/// Degenerate shapes are allowed: a single leaf (displaying {E}) and a single
/// edge (displaying a two-block partition). Neither has a node-partition.
class PartitioningTree {
 public:
  using Node = int;

  PartitioningTree() = default;

  Node add_leaf(Subset label);
  Node add_internal();
  void add_edge(Node u, Node v);

  static PartitioningTree single_leaf(Subset ground);
  /// One internal node adjacent to one leaf per block (a single edge for
  /// two-block partitions, a single leaf for {E}).
  static PartitioningTree star(const Partition& p);

  std::size_t node_count() const { return adjacency_.size(); }
  const std::vector<Node>& neighbours(Node v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::optional<Subset> label(Node v) const { return labels_.at(static_cast<std::size_t>(v)); }
  bool is_leaf(Node v) const { return label(v).has_value(); }
  std::vector<Node> leaves() const;
  std::vector<Node> internal_nodes() const;
  std::vector<std::pair<Node, Node>> edges() const;
  std::optional<Node> find_leaf(Subset label) const;

  /// Throws InvalidArgument unless this is a valid tree whose leaf labels
  /// partition `ground`.
  void validate(Subset ground) const;
  bool is_valid(Subset ground) const;

  Partition displayed_partition() const;
  /// Union of the leaf labels in the component of T - v containing w.
  Subset side(Node v, Node w) const;
  Partition node_partition(Node v) const;
  /// One partition per internal node, in node order. Throws InvalidArgument
  /// for trees without internal nodes.
  std::vector<Partition> node_partitions() const;

  std::string to_dot() const;

 private:
  std::vector<std::vector<Node>> adjacency_;
  std::vector<std::optional<Subset>> labels_;
};

/// True iff every node-partition of the tree satisfies `member`.
bool is_compatible(const PartitioningTree& tree, const std::function<bool(const Partition&)>& member);

/// Joins `left` (displaying (α|A)) and `right` (displaying (A^c|β)) by
/// removing the leaves labelled A and A^c and linking their neighbours. The
/// result displays (α|β) and its node-partitions are those of both inputs.
PartitioningTree merge_trees(const PartitioningTree& left, Subset pointed, const PartitioningTree& right);

}  // namespace widthdual
