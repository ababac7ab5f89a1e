#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "widthdual/family.hpp"
#include "widthdual/limits.hpp"
#include "widthdual/tree.hpp"

namespace widthdual {

/// The pair of pointed members whose merge first produced a closure member.
struct Derivation {
  PointedPartition left;
  PointedPartition right;
};

/// P↑: the least superset of an axiom set P closed under merging, with one
/// recorded derivation per non-axiom member. Immutable once built.
class ClosureTable {
 public:
  const GroundSet& ground() const { return ground_; }
  std::span<const Partition> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t axiom_count() const { return axiom_count_; }
  std::span<const Partition> axioms() const { return std::span(members_).first(axiom_count_); }

  bool contains(const Partition& p) const { return index_of(p).has_value(); }
  std::optional<std::size_t> index_of(const Partition& p) const;
  bool is_axiom(std::size_t index) const { return index < axiom_count_; }
  /// Empty for axioms.
  const std::optional<Derivation>& derivation(std::size_t index) const { return derivations_.at(index); }

 private:
  friend ClosureTable closure(const GroundSet& ground, std::span<const Partition> axioms, int cap);
  explicit ClosureTable(GroundSet ground) : ground_(std::move(ground)) {}

  GroundSet ground_;
  std::vector<Partition> members_;
  std::vector<std::optional<Derivation>> derivations_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t axiom_count_ = 0;
};

/// Computes P↑ by a merge fixpoint. Axioms are deduplicated and put in
/// partition-key order first, so members and derivations do not depend on
/// the order the axioms are given in.
ClosureTable closure(const GroundSet& ground, std::span<const Partition> axioms, int cap = kClosureCap);

/// A tree compatible with the axioms that displays `member`, rebuilt from the
/// recorded derivations.
PartitioningTree witness_tree(const ClosureTable& table, const Partition& member);

/// Splitting (α|A) ∈ P↑ \ P as (γ|μ|A) with (γ|C) ∈ P having at least three
/// blocks and (C^c|μ|A) ∈ P↑.
struct Decomposition {
  PointedPartition decomposer;               // (γ|C), pointed at C
  std::optional<PointedPartition> residual;  // (C^c|μ|A), pointed at A; empty when x is an axiom
  bool identity() const { return !residual.has_value(); }
};

Decomposition decompose(const PointedPartition& x, const ClosureTable& table);

}  // namespace widthdual
