#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "widthdual/family.hpp"
#include "widthdual/limits.hpp"

namespace widthdual {

/// Calls fn on every partition of the ground set exactly once, in
/// restricted-growth-string order. With max_blocks set, partitions with more
/// blocks are skipped. Throws CapExceeded above `cap` elements.
void for_each_partition(const GroundSet& ground, const std::function<void(const Partition&)>& fn,
                        std::optional<int> max_blocks = std::nullopt, int cap = kEnumerationCap);

std::vector<Partition> enumerate_partitions(const GroundSet& ground, std::optional<int> max_blocks = std::nullopt,
                                            int cap = kEnumerationCap);

/// All antichains (under inclusion) drawn from `candidates`, including the
/// empty antichain. Throws CapExceeded once more than max_count are found.
std::vector<std::vector<Subset>> enumerate_antichains(std::span<const Subset> candidates,
                                                      std::size_t max_count);

/// Every subset of the ground set, empty set included, in numeric order.
std::vector<Subset> all_subsets(const GroundSet& ground);

/// Keeps only the inclusion-maximal (or minimal) sets; result in canonical order.
std::vector<Subset> maximal_sets(std::span<const Subset> sets);
std::vector<Subset> minimal_sets(std::span<const Subset> sets);

/// A random antichain of subsets of the ground set, drawn by greedy insertion
/// of uniformly random subsets. Used to sample small-set systems.
std::vector<Subset> random_antichain(const GroundSet& ground, std::mt19937_64& rng);

}  // namespace widthdual
