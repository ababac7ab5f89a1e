#include "widthdual/tree.hpp"

#include <algorithm>
#include <sstream>

#include "widthdual/errors.hpp"

namespace widthdual {

PartitioningTree::Node PartitioningTree::add_leaf(Subset label) {
  adjacency_.emplace_back();
  labels_.emplace_back(label);
  return static_cast<Node>(adjacency_.size() - 1);
}

PartitioningTree::Node PartitioningTree::add_internal() {
  adjacency_.emplace_back();
  labels_.emplace_back(std::nullopt);
  return static_cast<Node>(adjacency_.size() - 1);
}

void PartitioningTree::add_edge(Node u, Node v) {
  const auto n = static_cast<Node>(adjacency_.size());
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
    throw InvalidArgument("invalid tree edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[static_cast<std::size_t>(u)].push_back(v);
  adjacency_[static_cast<std::size_t>(v)].push_back(u);
}

PartitioningTree PartitioningTree::single_leaf(Subset ground) {
  PartitioningTree t;
  t.add_leaf(ground);
  return t;
}

PartitioningTree PartitioningTree::star(const Partition& p) {
  PartitioningTree t;
  if (p.size() == 1) return single_leaf(p.ground());
  if (p.size() == 2) {
    t.add_edge(t.add_leaf(p.blocks()[0]), t.add_leaf(p.blocks()[1]));
    return t;
  }
  const Node centre = t.add_internal();
  for (Subset b : p.blocks()) t.add_edge(centre, t.add_leaf(b));
  return t;
}

std::vector<PartitioningTree::Node> PartitioningTree::leaves() const {
  std::vector<Node> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v]) out.push_back(static_cast<Node>(v));
  }
  return out;
}

std::vector<PartitioningTree::Node> PartitioningTree::internal_nodes() const {
  std::vector<Node> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!labels_[v]) out.push_back(static_cast<Node>(v));
  }
  return out;
}

std::vector<std::pair<PartitioningTree::Node, PartitioningTree::Node>> PartitioningTree::edges() const {
  std::vector<std::pair<Node, Node>> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Node v : adjacency_[u]) {
      if (static_cast<Node>(u) < v) out.emplace_back(static_cast<Node>(u), v);
    }
  }
  return out;
}

std::optional<PartitioningTree::Node> PartitioningTree::find_leaf(Subset label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] && *labels_[v] == label) return static_cast<Node>(v);
  }
  return std::nullopt;
}

void PartitioningTree::validate(Subset ground) const {
  const std::size_t n = adjacency_.size();
  if (n == 0) throw InvalidArgument("tree has no nodes");
  std::size_t edge_ends = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t deg = adjacency_[v].size();
    edge_ends += deg;
    if (labels_[v]) {
      if (deg > 1) throw InvalidArgument("leaf " + std::to_string(v) + " has degree " + std::to_string(deg));
      if (deg == 0 && n != 1) throw InvalidArgument("isolated leaf " + std::to_string(v));
    } else if (deg < 3) {
      throw InvalidArgument("internal node " + std::to_string(v) + " has degree " + std::to_string(deg));
    }
    auto sorted = adjacency_[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("parallel tree edges at node " + std::to_string(v));
    }
  }
  if (edge_ends / 2 != n - 1) throw InvalidArgument("tree edge count does not match node count");
  std::vector<char> seen(n, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node w : adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InvalidArgument("tree is disconnected");
  Subset covered;
  for (const auto& l : labels_) {
    if (!l) continue;
    if (l->empty()) throw InvalidArgument("empty leaf label");
    if (covered.intersects(*l)) throw InvalidArgument("leaf labels overlap at " + l->to_string());
    covered |= *l;
  }
  if (covered != ground) {
    throw InvalidArgument("leaf labels cover " + covered.to_string() + ", expected " + ground.to_string());
  }
}

bool PartitioningTree::is_valid(Subset ground) const {
  try {
    validate(ground);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

Partition PartitioningTree::displayed_partition() const {
  std::vector<Subset> blocks;
  for (const auto& l : labels_) {
    if (l) blocks.push_back(*l);
  }
  return Partition(std::move(blocks));
}

Subset PartitioningTree::side(Node v, Node w) const {
  Subset acc;
  std::vector<std::pair<Node, Node>> stack{{w, v}};
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    if (const auto& l = labels_[static_cast<std::size_t>(x)]) acc |= *l;
    for (Node y : adjacency_[static_cast<std::size_t>(x)]) {
      if (y != parent) stack.emplace_back(y, x);
    }
  }
  return acc;
}

Partition PartitioningTree::node_partition(Node v) const {
  std::vector<Subset> blocks;
  for (Node w : neighbours(v)) blocks.push_back(side(v, w));
  return Partition(std::move(blocks));
}

std::vector<Partition> PartitioningTree::node_partitions() const {
  std::vector<Partition> out;
  for (Node v : internal_nodes()) out.push_back(node_partition(v));
  if (out.empty()) throw InvalidArgument("tree has no internal node");
  return out;
}

std::string PartitioningTree::to_dot() const {
  std::ostringstream os;
  os << "graph partitioning_tree {\n";
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    os << "  n" << v;
    if (labels_[v]) {
      os << " [shape=box,label=\"" << labels_[v]->to_string() << "\"]";
    } else {
      os << " [shape=point]";
    }
    os << ";\n";
  }
  for (auto [u, v] : edges()) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

bool is_compatible(const PartitioningTree& tree, const std::function<bool(const Partition&)>& member) {
  for (auto v : tree.internal_nodes()) {
    if (!member(tree.node_partition(v))) return false;
  }
  return true;
}

PartitioningTree merge_trees(const PartitioningTree& left, Subset pointed, const PartitioningTree& right) {
  const Subset ground = left.displayed_partition().ground();
  if (right.displayed_partition().ground() != ground) {
    throw InvalidArgument("merge_trees: trees display partitions of different ground sets");
  }
  const Subset co = ground - pointed;
  const auto u = left.find_leaf(pointed);
  const auto u2 = right.find_leaf(co);
  if (!u || !u2 || co.empty()) {
    throw InvalidArgument("merge_trees: no complementary leaves labelled " + pointed.to_string() + " / " +
                          co.to_string());
  }
  if (left.neighbours(*u).size() != 1 || right.neighbours(*u2).size() != 1) {
    throw InvalidArgument("merge_trees: cannot merge at a single-leaf tree");
  }

  PartitioningTree out;
  std::vector<PartitioningTree::Node> map_left(left.node_count(), -1);
  std::vector<PartitioningTree::Node> map_right(right.node_count(), -1);
  auto copy_nodes = [&out](const PartitioningTree& t, PartitioningTree::Node skip, auto& map) {
    for (std::size_t v = 0; v < t.node_count(); ++v) {
      const auto node = static_cast<PartitioningTree::Node>(v);
      if (node == skip) continue;
      map[v] = t.is_leaf(node) ? out.add_leaf(*t.label(node)) : out.add_internal();
    }
    for (auto [a, b] : t.edges()) {
      if (a != skip && b != skip) out.add_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    }
  };
  copy_nodes(left, *u, map_left);
  copy_nodes(right, *u2, map_right);
  out.add_edge(map_left[static_cast<std::size_t>(left.neighbours(*u).front())],
               map_right[static_cast<std::size_t>(right.neighbours(*u2).front())]);
  return out;
}

}  // namespace widthdual
