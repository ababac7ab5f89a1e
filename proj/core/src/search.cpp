#include "widthdual/search.hpp"

#include <string>
#include <vector>

#include "widthdual/errors.hpp"

namespace widthdual {

namespace {

class TreeSearch {
 public:
  TreeSearch(const GroundSet& ground, const PartitionPredicate& member, const SubsetPredicate& is_small)
      : full_(ground.full()),
        member_(member),
        small_(is_small),
        state_(std::size_t{1} << ground.size(), State::kUnknown),
        split_(std::size_t{1} << ground.size()) {}

  std::optional<PartitioningTree> run() {
    if (small_(full_) && member_(Partition::whole(full_))) return PartitioningTree::single_leaf(full_);
    const Subset rest = full_ - Subset::singleton(0);
    std::optional<Subset> edge_side;
    for_each_nonempty_submask(rest, [&](Subset s) {
      if (edge_side) return;
      const Subset a = s;
      const Subset b = full_ - s;
      if (small_(a) && small_(b) && member_(Partition({a, b}))) edge_side = a;
    });
    if (edge_side) {
      PartitioningTree t;
      t.add_edge(t.add_leaf(*edge_side), t.add_leaf(full_ - *edge_side));
      return t;
    }

    std::vector<Subset> parts;
    std::optional<std::vector<Subset>> root;
    split(full_, Subset(), 3, parts, root);
    if (!root) return std::nullopt;

    PartitioningTree t;
    const auto centre = t.add_internal();
    for (Subset part : *root) attach(t, centre, part);
    return t;
  }

 private:
  enum class State : unsigned char { kUnknown, kInfeasible, kLeaf, kSplit };

  bool feasible(Subset y) {
    State& s = state_[y.bits()];
    if (s == State::kUnknown) {
      if (small_(y)) {
        s = State::kLeaf;
      } else {
        std::vector<Subset> parts;
        std::optional<std::vector<Subset>> found;
        split(y, full_ - y, 2, parts, found);
        if (found) {
          split_[y.bits()] = std::move(*found);
          s = State::kSplit;
        } else {
          s = State::kInfeasible;
        }
      }
    }
    return s != State::kInfeasible;
  }

  // Enumerates partitions of `remaining` into feasible parts (appended to
  // `parts`), stopping at the first whose parts plus the co-block form a
  // member with at least min_parts parts besides the co-block.
  void split(Subset remaining, Subset co_block, std::size_t min_parts, std::vector<Subset>& parts,
             std::optional<std::vector<Subset>>& found) {
    if (found) return;
    if (remaining.empty()) {
      if (parts.size() < min_parts) return;
      std::vector<Subset> blocks(parts);
      if (!co_block.empty()) blocks.push_back(co_block);
      if (member_(Partition(std::move(blocks)))) found = parts;
      return;
    }
    const Subset low = Subset::singleton(remaining.min_element());
    const Subset others = remaining - low;
    auto try_part = [&](Subset part) {
      if (found) return;
      // The first part may not be the whole block being split.
      if (parts.empty() && part == remaining) return;
      if (!feasible(part)) return;
      parts.push_back(part);
      split(remaining - part, co_block, min_parts, parts, found);
      parts.pop_back();
    };
    try_part(low);
    for_each_nonempty_submask(others, [&](Subset s) { try_part(low | s); });
  }

  void attach(PartitioningTree& t, PartitioningTree::Node parent, Subset y) {
    if (state_[y.bits()] == State::kLeaf) {
      t.add_edge(parent, t.add_leaf(y));
      return;
    }
    const auto node = t.add_internal();
    t.add_edge(parent, node);
    for (Subset part : split_[y.bits()]) attach(t, node, part);
  }

  Subset full_;
  const PartitionPredicate& member_;
  const SubsetPredicate& small_;
  std::vector<State> state_;
  std::vector<std::vector<Subset>> split_;
};

}  // namespace

std::optional<PartitioningTree> find_compatible_tree(const GroundSet& ground, const PartitionPredicate& member,
                                                     const SubsetPredicate& is_small, int cap) {
  if (ground.size() > cap) {
    throw CapExceeded("tree search over " + std::to_string(ground.size()) + " elements exceeds cap " +
                      std::to_string(cap));
  }
  return TreeSearch(ground, member, is_small).run();
}

std::optional<PartitioningTree> find_compatible_tree(const GroundSet& ground, const PartitionPredicate& member,
                                                     const SmallSetSystem& leaves, int cap) {
  return find_compatible_tree(ground, member, SubsetPredicate([&leaves](Subset s) { return leaves.is_small(s); }), cap);
}

}  // namespace widthdual
