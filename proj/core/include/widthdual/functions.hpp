#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "widthdual/family.hpp"
#include "widthdual/graph.hpp"
#include "widthdual/limits.hpp"
#include "widthdual/report.hpp"
#include "widthdual/value.hpp"

namespace widthdual {

/// Ψ: a deterministic total map from partitions of the ground set to Q ∪ {+∞}.
class PartitionFunction {
 public:
  using Evaluator = std::function<Value(const Partition&)>;

  PartitionFunction(GroundSet ground, Evaluator evaluator, std::string descriptor);

  Value operator()(const Partition& p) const { return evaluator_(p); }
  Value operator()(const PointedPartition& p) const { return evaluator_(p.base()); }
  const GroundSet& ground() const { return ground_; }
  const std::string& descriptor() const { return descriptor_; }

 private:
  GroundSet ground_;
  Evaluator evaluator_;
  std::string descriptor_;
};

/// Caches values by partition key. The cache is mutex-guarded, so the
/// returned function can be shared across threads.
PartitionFunction memoized(const PartitionFunction& psi);

/// Ψ(μ) = 0 if μ ∈ P, 1 otherwise.
PartitionFunction indicator_pf(const GroundSet& ground, std::span<const Partition> members);

/// Explicit table. Partitions missing from the table take `fallback`, or are
/// rejected at evaluation time when no fallback is given.
PartitionFunction table_pf(const GroundSet& ground, const std::vector<std::pair<Partition, Value>>& entries,
                           std::optional<Value> fallback = std::nullopt);

/// A set function over 2^E, tabulated.
class SetFunction {
 public:
  SetFunction(GroundSet ground, const std::function<Value(Subset)>& rule);
  SetFunction(GroundSet ground, std::vector<Value> table);

  Value operator()(Subset s) const { return table_.at(s.bits()); }
  const GroundSet& ground() const { return ground_; }
  const std::vector<Value>& table() const { return table_; }

 private:
  GroundSet ground_;
  std::vector<Value> table_;
};

/// Checks symmetry f(A) = f(A^c) and submodularity exhaustively; the first
/// violation found is reported with its set(s).
PropertyReport verify_connectivity(const SetFunction& f, int cap = kSetFunctionVerifyCap);

/// A symmetric submodular set function. Construction verifies both axioms
/// when the ground set is within the verification cap.
class ConnectivityFunction {
 public:
  explicit ConnectivityFunction(SetFunction f, std::string descriptor = "connectivity",
                                int verify_cap = kSetFunctionVerifyCap);

  Value operator()(Subset s) const { return f_(s); }
  const GroundSet& ground() const { return f_.ground(); }
  const SetFunction& set_function() const { return f_; }
  const std::string& descriptor() const { return descriptor_; }

 private:
  SetFunction f_;
  std::string descriptor_;
};

/// Builds a connectivity function from a partial table, filling f(A^c) from
/// f(A) where only one side is given. Conflicting or missing pairs throw.
ConnectivityFunction connectivity_from_table(const GroundSet& ground, const std::vector<std::pair<Subset, Value>>& entries);

/// Treewidth partition function on the edge set: number of vertices incident
/// with edges in at least two blocks.
PartitionFunction border(const Graph& g);

/// f(A) = number of vertices incident with an edge in A and an edge outside A.
ConnectivityFunction vertex_boundary_f(const Graph& g);

/// f(A) = GF(2) rank of the A x A^c adjacency submatrix, on the vertex set.
ConnectivityFunction cut_rank_f(const Graph& g);

/// max_f(μ) = max over blocks X of f(X).
PartitionFunction max_f(const ConnectivityFunction& f);

/// Ψ on partitions with at most `max_blocks` blocks and +∞ elsewhere, so
/// compatible trees have internal degree at most `max_blocks`. Absorbing a
/// set into a block never adds blocks, so this keeps weak submodularity.
PartitionFunction at_most_blocks(PartitionFunction psi, std::size_t max_blocks);

/// P_k = {μ : Ψ(μ) <= k}.
class LevelSet {
 public:
  LevelSet(PartitionFunction psi, Value threshold) : psi_(std::move(psi)), threshold_(threshold) {}

  bool contains(const Partition& p) const { return psi_(p) <= threshold_; }
  std::vector<Partition> enumerate(int cap = kEnumerationCap) const;
  const PartitionFunction& function() const { return psi_; }
  const Value& threshold() const { return threshold_; }

 private:
  PartitionFunction psi_;
  Value threshold_;
};

inline LevelSet level_set(PartitionFunction psi, Value threshold) { return LevelSet(std::move(psi), threshold); }

}  // namespace widthdual
