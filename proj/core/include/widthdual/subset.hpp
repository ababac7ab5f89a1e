#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "widthdual/limits.hpp"

namespace widthdual {

/// A subset of a ground set {0, ..., n-1}, stored as a bit mask.
///
/// All set algebra is constant time. The empty subset is a valid value; the
/// containers built on top (SetFamily, Partition) reject it where a block is
/// required.
class Subset {
 public:
  using Bits = std::uint32_t;
  static constexpr int kMaxElements = 32;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);
  static constexpr Subset singleton(int e) { return Subset(Bits{1} << e); }
  static constexpr Subset full(int n) {
    return Subset(n >= kMaxElements ? ~Bits{0} : ((Bits{1} << n) - 1));
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  /// this ⊆ other
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; undefined on the empty subset.
  constexpr int min_element() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const;
  std::string to_string() const;

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  /// Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  Bits bits_ = 0;
};

/// Canonical block order: lexicographic on the increasing element lists
/// (so first by minimum element, a proper prefix sorts first).
bool canonical_less(Subset a, Subset b);

struct SubsetHash {
  std::size_t operator()(Subset s) const noexcept { return std::hash<Subset::Bits>{}(s.bits()); }
};

/// Calls fn on every nonempty submask of s, in increasing numeric order.
template <typename Fn>
void for_each_nonempty_submask(Subset s, Fn&& fn) {
  const Subset::Bits full = s.bits();
  // Increasing-order submask walk: next = (cur - full) & full.
  Subset::Bits cur = full & (0 - full);
  while (cur != 0) {
    fn(Subset(cur));
    if (cur == full) break;
    cur = (cur - full) & full;
  }
}

/// The finite set E being decomposed: elements 0..size-1, optionally named.
class GroundSet {
 public:
  explicit GroundSet(int size, int cap = kGroundCap);
  explicit GroundSet(std::vector<std::string> labels, int cap = kGroundCap);

  int size() const { return size_; }
  Subset full() const { return Subset::full(size_); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  Subset complement(Subset s) const { return full() - s; }
  bool contains(Subset s) const { return s.subset_of(full()); }

 private:
  int size_;
  std::vector<std::string> labels_;
};

/// E \ S. May be empty.
inline Subset complement(Subset s, const GroundSet& ground) { return ground.complement(s); }

}  // namespace widthdual
