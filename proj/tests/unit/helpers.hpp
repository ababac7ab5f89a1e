#pragma once

#include <vector>

#include "oracles.hpp"
#include "widthdual/enumerate.hpp"
#include "widthdual/family.hpp"

namespace testing_helpers {

using widthdual::Partition;
using widthdual::SetFamily;
using widthdual::Subset;

inline Subset S(std::initializer_list<int> e) { return Subset::of(e); }

inline oracle::Family to_masks(const SetFamily& f) {
  oracle::Family out;
  for (Subset b : f) out.push_back(b.bits());
  return oracle::normalize(out);
}

inline SetFamily from_masks(const oracle::Family& f) {
  std::vector<Subset> blocks;
  for (auto m : f) blocks.push_back(Subset(m));
  return SetFamily(blocks);
}

inline Partition partition_from_masks(const oracle::Family& f) {
  std::vector<Subset> blocks;
  for (auto m : f) blocks.push_back(Subset(m));
  return Partition(blocks);
}

inline std::vector<Partition> partitions_from_masks(const std::vector<oracle::Family>& fs) {
  std::vector<Partition> out;
  for (const auto& f : fs) out.push_back(partition_from_masks(f));
  return out;
}

/// Subsets of `universe` picked by the bits of `pick`.
template <typename T>
std::vector<T> pick_subset(const std::vector<T>& universe, std::uint64_t pick) {
  std::vector<T> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if ((pick >> i) & 1u) out.push_back(universe[i]);
  }
  return out;
}

}  // namespace testing_helpers
