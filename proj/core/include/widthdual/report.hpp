#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthdual/duality.hpp"
#include "widthdual/family.hpp"

namespace widthdual {

/// Whatever falsifies a property: the pointed pair, the set(s) involved, or
/// the small-set system, plus a human-readable explanation.
struct Counterexample {
  std::vector<PointedPartition> pointed;
  std::vector<Subset> sets;
  std::optional<SmallSetSystem> small_sets;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<Counterexample> counterexample;  // present iff !holds
  bool exhaustive = true;                        // false when only sampled

  static PropertyReport pass(std::string property) { return PropertyReport{std::move(property), true, std::nullopt}; }
  static PropertyReport fail(std::string property, Counterexample c) {
    return PropertyReport{std::move(property), false, std::move(c)};
  }
  explicit operator bool() const { return holds; }
};

}  // namespace widthdual
