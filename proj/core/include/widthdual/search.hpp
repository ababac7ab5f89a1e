#pragma once

#include <functional>
#include <optional>

#include "widthdual/duality.hpp"
#include "widthdual/family.hpp"
#include "widthdual/limits.hpp"
#include "widthdual/tree.hpp"

namespace widthdual {

using PartitionPredicate = std::function<bool(const Partition&)>;
using SubsetPredicate = std::function<bool(Subset)>;

/// Exhaustive search for a partial partitioning tree whose node-partitions
/// all satisfy `member` and whose leaves are all small.
///
/// The search is rooted: a non-root internal node with block Y splits it
/// into at least two feasible parts Y1..Yr with {Y1, ..., Yr, Y^c} a member,
/// and the root splits E into at least three. Because the co-block of Y is
/// always Y^c, feasibility memoizes on Y alone. Trees without internal nodes
/// (one leaf, or one edge) are accepted only when their displayed partition
/// is itself a member, which keeps "a tree exists" equivalent to "P↑ has a
/// small partition".
std::optional<PartitioningTree> find_compatible_tree(const GroundSet& ground, const PartitionPredicate& member,
                                                     const SubsetPredicate& is_small, int cap = kSearchCap);

std::optional<PartitioningTree> find_compatible_tree(const GroundSet& ground, const PartitionPredicate& member,
                                                     const SmallSetSystem& leaves, int cap = kSearchCap);

}  // namespace widthdual
