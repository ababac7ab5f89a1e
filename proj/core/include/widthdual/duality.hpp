#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "widthdual/closure.hpp"
#include "widthdual/family.hpp"

namespace widthdual {

/// A downward-closed family of "small" sets, stored by its maximal members.
///
/// An empty maximal list means nothing is small, not even the empty set.
/// Listing the empty set as the only maximal member makes exactly ∅ small.
class SmallSetSystem {
 public:
  SmallSetSystem() = default;
  /// Reduces `generators` to its maximal members.
  explicit SmallSetSystem(std::vector<Subset> generators);

  /// ∅ and the singletons.
  static SmallSetSystem singletons(const GroundSet& ground);
  /// Every subset of the ground set.
  static SmallSetSystem everything(const GroundSet& ground);
  static SmallSetSystem nothing() { return SmallSetSystem(); }

  const std::vector<Subset>& maximal_members() const { return maximal_; }
  bool is_small(Subset s) const;
  bool is_big(Subset s) const { return !is_small(s); }
  /// The inclusion-minimal sets outside the system.
  std::vector<Subset> minimal_big_sets(const GroundSet& ground) const;

  friend bool operator==(const SmallSetSystem&, const SmallSetSystem&) = default;

 private:
  std::vector<Subset> maximal_;
};

/// An upward-closed family, stored by its minimal members.
class UpFamily {
 public:
  UpFamily() = default;
  explicit UpFamily(std::vector<Subset> generators);

  const std::vector<Subset>& minimal_members() const { return minimal_; }
  bool empty() const { return minimal_.empty(); }
  bool contains(Subset s) const;
  /// True iff some block of the partition is a member.
  bool meets(const Partition& p) const;
  /// The family without one minimal member; still upward closed.
  UpFamily without(Subset minimal_member, const GroundSet& ground) const;

  friend bool operator==(const UpFamily&, const UpFamily&) = default;

 private:
  std::vector<Subset> minimal_;
};

bool is_small_partition(const Partition& p, const SmallSetSystem& small);
bool has_small_partition(std::span<const Partition> q, const SmallSetSystem& small);

/// Pairwise-intersecting and meeting every partition of `partitions`.
/// The empty family counts as a bramble only for an empty partition set.
bool is_bramble(const UpFamily& family, std::span<const Partition> partitions);
/// Same definition applied verbatim to an explicit (not upward-closed) family.
bool is_bramble(const SetFamily& family, std::span<const Partition> partitions);

bool is_big_bramble(const UpFamily& family, std::span<const Partition> partitions, const SmallSetSystem& small);

/// Bramble status agrees on P and P↑ (`table` must be the closure of P).
bool check_bramble_lift(const UpFamily& family, std::span<const Partition> axioms, const ClosureTable& table);
bool check_bramble_lift(const SetFamily& family, std::span<const Partition> axioms, const ClosureTable& table);

struct BrambleConstruction {
  UpFamily family;
  bool verified = false;  // is_big_bramble held on the result
};

/// Predicate deciding whether an upward-closed family meets every partition
/// of some (possibly implicit) partition set.
using MeetsAll = std::function<bool(const UpFamily&)>;

/// Starts from all big sets and drops minimal members (canonically first
/// removable one each round) while the family still meets everything,
/// stopping at an inclusion-wise minimal upward-closed family. Returns
/// nullopt when even the family of all big sets fails to meet, i.e. a small
/// partition is present.
std::optional<BrambleConstruction> construct_big_bramble(const MeetsAll& meets_all, const GroundSet& ground,
                                                         const SmallSetSystem& small,
                                                         const std::function<bool(const UpFamily&)>& verify);

/// Explicit-set version: meeting and verification are checked against q.
std::optional<BrambleConstruction> construct_big_bramble(std::span<const Partition> q, const GroundSet& ground,
                                                         const SmallSetSystem& small);

/// Exhaustive search for a big q-bramble: a choice of one big block per
/// partition with all choices pairwise intersecting. Returns its upward closure.
std::optional<UpFamily> find_big_bramble(std::span<const Partition> q, const SmallSetSystem& small);

/// The small-set system "everything inside a block of (α|β)" for disjoint
/// pointed blocks A and B.
SmallSetSystem non_dualising_witness(const PointedPartition& left, const PointedPartition& right);

/// Exactly one of: some member of P↑ is small; every member has a big block.
bool dummy_cover_check(const ClosureTable& table, const SmallSetSystem& small);

}  // namespace widthdual
