#include "widthdual/closure.hpp"

#include <algorithm>
#include <string>

#include "widthdual/errors.hpp"

namespace widthdual {

std::optional<std::size_t> ClosureTable::index_of(const Partition& p) const {
  if (p.ground() != ground_.full()) return std::nullopt;
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClosureTable closure(const GroundSet& ground, std::span<const Partition> axioms, int cap) {
  if (ground.size() > cap) {
    throw CapExceeded("closure over " + std::to_string(ground.size()) + " elements exceeds cap " +
                      std::to_string(cap));
  }
  ClosureTable table(ground);
  const Subset full = ground.full();

  std::vector<Partition> sorted(axioms.begin(), axioms.end());
  for (const Partition& p : sorted) {
    if (p.ground() != full) throw InvalidArgument("axiom " + p.to_string() + " is not a partition of the ground set");
  }
  std::sort(sorted.begin(), sorted.end(), [](const Partition& a, const Partition& b) { return a.key() < b.key(); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::unordered_map<Subset::Bits, std::vector<std::size_t>> by_block;
  auto insert = [&](Partition p, std::optional<Derivation> d) {
    const std::size_t idx = table.members_.size();
    table.index_.emplace(p.key(), idx);
    for (Subset b : p.blocks()) by_block[b.bits()].push_back(idx);
    table.members_.push_back(std::move(p));
    table.derivations_.push_back(std::move(d));
  };
  for (Partition& p : sorted) insert(std::move(p), std::nullopt);
  table.axiom_count_ = table.members_.size();

  // Each unordered pair (i, j) with j <= i is examined when i is processed.
  for (std::size_t i = 0; i < table.members_.size(); ++i) {
    const std::vector<Subset> blocks(table.members_[i].blocks().begin(), table.members_[i].blocks().end());
    for (Subset a : blocks) {
      const Subset co = full - a;
      if (co.empty()) continue;
      auto it = by_block.find(co.bits());
      if (it == by_block.end()) continue;
      const std::vector<std::size_t> partners = it->second;
      for (std::size_t j : partners) {
        if (j > i) break;
        PointedPartition left(table.members_[i], a);
        PointedPartition right(table.members_[j], co);
        Partition merged = merge(left, right);
        if (table.index_.count(merged.key())) continue;
        insert(std::move(merged), Derivation{std::move(left), std::move(right)});
      }
    }
  }
  return table;
}

namespace {

const PartitioningTree& witness_for(const ClosureTable& table, std::size_t idx,
                                    std::vector<std::optional<PartitioningTree>>& memo) {
  if (memo[idx]) return *memo[idx];
  const auto& d = table.derivation(idx);
  if (!d) {
    memo[idx] = PartitioningTree::star(table.members()[idx]);
  } else {
    const std::size_t l = *table.index_of(d->left.base());
    const std::size_t r = *table.index_of(d->right.base());
    const PartitioningTree& lt = witness_for(table, l, memo);
    const PartitioningTree& rt = witness_for(table, r, memo);
    memo[idx] = merge_trees(lt, d->left.pointed(), rt);
  }
  return *memo[idx];
}

}  // namespace

PartitioningTree witness_tree(const ClosureTable& table, const Partition& member) {
  const auto idx = table.index_of(member);
  if (!idx) throw InvalidArgument("witness_tree: " + member.to_string() + " is not a closure member");
  std::vector<std::optional<PartitioningTree>> memo(table.size());
  return witness_for(table, *idx, memo);
}

Decomposition decompose(const PointedPartition& x, const ClosureTable& table) {
  const auto idx = table.index_of(x.base());
  if (!idx) throw InvalidArgument("decompose: " + x.base().to_string() + " is not a closure member");
  if (table.is_axiom(*idx)) return Decomposition{x, std::nullopt};

  const PartitioningTree tree = witness_tree(table, x.base());
  const auto leaf_a = tree.find_leaf(x.pointed());
  for (auto v : tree.internal_nodes()) {
    std::optional<PartitioningTree::Node> inner;
    int inner_count = 0;
    bool touches_a = false;
    for (auto w : tree.neighbours(v)) {
      if (!tree.is_leaf(w)) {
        inner = w;
        ++inner_count;
      } else if (w == *leaf_a) {
        touches_a = true;
      }
    }
    if (inner_count != 1 || touches_a) continue;

    const Subset c = tree.side(v, *inner);
    PointedPartition decomposer(tree.node_partition(v), c);
    const Subset linked = table.ground().full() - c;
    std::vector<Subset> blocks{linked};
    for (Subset b : x.base().blocks()) {
      if (!b.subset_of(linked)) blocks.push_back(b);
    }
    PointedPartition residual(Partition(std::move(blocks), table.ground().full()), x.pointed());
    return Decomposition{std::move(decomposer), std::move(residual)};
  }
  throw Error("decompose: witness tree for " + x.base().to_string() + " has no peripheral internal node");
}

}  // namespace widthdual
