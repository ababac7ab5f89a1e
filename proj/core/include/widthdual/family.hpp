#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "widthdual/subset.hpp"

namespace widthdual {

/// Sorts blocks into canonical order. Does not validate or deduplicate.
std::vector<Subset> canonical(std::vector<Subset> blocks);

/// A finite set of nonempty subsets, possibly overlapping, kept in canonical
/// order so that family equality is plain vector equality.
class SetFamily {
 public:
  SetFamily() = default;
  /// Rejects empty blocks and duplicates.
  explicit SetFamily(std::vector<Subset> blocks);
  SetFamily(std::initializer_list<Subset> blocks) : SetFamily(std::vector<Subset>(blocks)) {}

  /// Set union of two families; shared blocks appear once.
  static SetFamily union_of(const SetFamily& a, const SetFamily& b);
  /// Builds a family from arbitrary blocks, dropping empties and duplicates.
  static SetFamily normalized(std::vector<Subset> blocks);

  std::span<const Subset> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  bool contains(Subset block) const;
  /// Union of all blocks.
  Subset support() const;
  std::string to_string() const;

  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<Subset> blocks_;
};

/// A partition of a ground set: pairwise disjoint nonempty blocks covering it.
class Partition {
 public:
  /// Partition of the union of `blocks`.
  explicit Partition(std::vector<Subset> blocks);
  /// Partition of `ground`; throws unless the blocks cover it exactly.
  Partition(std::vector<Subset> blocks, Subset ground);
  Partition(std::initializer_list<Subset> blocks) : Partition(std::vector<Subset>(blocks)) {}

  /// The one-block partition {E}.
  static Partition whole(Subset ground) { return Partition({ground}); }
  static Partition singletons(Subset ground);

  const SetFamily& family() const { return family_; }
  std::span<const Subset> blocks() const { return family_.blocks(); }
  std::size_t size() const { return family_.size(); }
  Subset ground() const { return ground_; }
  bool contains(Subset block) const { return family_.contains(block); }
  std::string to_string() const { return family_.to_string(); }

  /// Restricted-growth encoding (4 bits per element), unique among the
  /// partitions of one ground set of at most 16 elements.
  std::uint64_t key() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.family_ == b.family_; }

 private:
  SetFamily family_;
  Subset ground_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept { return std::hash<std::uint64_t>{}(p.key()); }
};

/// (α|A): a partition with one distinguished block A.
class PointedPartition {
 public:
  PointedPartition(Partition base, Subset pointed);

  const Partition& base() const { return base_; }
  Subset pointed() const { return pointed_; }
  std::size_t pointed_index() const;
  /// α: the blocks other than the pointed one (empty when A = E).
  SetFamily rest() const;

  friend bool operator==(const PointedPartition&, const PointedPartition&) = default;

 private:
  Partition base_;
  Subset pointed_;
};

/// All pointed forms of every partition, in partition order then block order.
std::vector<PointedPartition> pointed_forms(std::span<const Partition> partitions);

/// Elements lying in at least two blocks.
Subset overlap(const SetFamily& family);

/// {X \ removed : X ∈ family}, with emptied blocks dropped.
SetFamily remove_from(const SetFamily& family, Subset removed);

/// Witness for a refinement: assignment[i] is the index (into the coarser
/// family's blocks) of the block that the i-th finer block came from.
struct RefinementWitness {
  std::vector<std::size_t> assignment;
};

/// True iff `finer` arises from `coarser` by deletions and splits.
std::optional<RefinementWitness> is_finer(const SetFamily& finer, const SetFamily& coarser);

/// True iff `finer` arises from `coarser` by deletions alone.
std::optional<RefinementWitness> is_strongly_finer(const SetFamily& finer, const SetFamily& coarser);

/// Coordinate-wise refinement: finer[i] is finer than coarser[i] for every i
/// < finer.size() (requires finer.size() <= coarser.size()).
bool is_finer_coordinatewise(std::span<const SetFamily> finer, std::span<const SetFamily> coarser);

/// The merged partition (α|β) of (α|A) and (A^c|β).
Partition merge(const PointedPartition& left, const PointedPartition& right);

/// The covering (α|β) of (α|A) and (B|β): union of the non-pointed blocks.
SetFamily covering(const PointedPartition& left, const PointedPartition& right);

/// (α \ F | A ∪ F): absorb F ⊆ A^c into the pointed block.
PointedPartition absorb(const PointedPartition& p, Subset f);

}  // namespace widthdual
