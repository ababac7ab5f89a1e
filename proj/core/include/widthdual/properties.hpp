#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "widthdual/duality.hpp"
#include "widthdual/family.hpp"
#include "widthdual/functions.hpp"
#include "widthdual/limits.hpp"
#include "widthdual/report.hpp"

namespace widthdual {

// Pointed pairs are always ordered: both (x, y) and (y, x) are checked, and
// a partition may be paired with itself.

/// For every (α|A), (B|β) in P with A^c ∩ B^c nonempty, some nonempty
/// F ⊆ A^c ∩ B^c has (α\F | A∪F) ∈ P or (B∪F | β\F) ∈ P.
PropertyReport is_pushing(std::span<const Partition> p);

/// For every (α|A), (B|β) in Q with A ∩ B empty, some member of Q is finer
/// than the covering (α|β).
PropertyReport is_refining(std::span<const Partition> q);

/// As is_refining, with "strongly finer" (deletions only).
PropertyReport is_strongly_refining(std::span<const Partition> q);

struct DualisingOptions {
  int cap = kDualisingCap;              // exhaustive sweep up to this many elements
  std::size_t max_antichains = 100000;  // guard on the exhaustive sweep
  std::size_t samples = 0;              // sampled systems above the cap (0: refuse)
  std::uint64_t seed = 0;
};

/// For every small-set system S: Q has a small partition or a big Q-bramble.
/// Exhaustive over all downward-closed S up to the cap; above it, random
/// systems are sampled when options.samples > 0 (report.exhaustive = false).
PropertyReport is_dualising(const GroundSet& ground, std::span<const Partition> q, const DualisingOptions& options = {});

/// Ψ(α|A) + Ψ(B|β) >= Ψ(α\B^c | A∪B^c) + Ψ(β\A^c | B∪A^c) for all pairs.
PropertyReport is_submodular_pf(const PartitionFunction& psi, int cap = kEnumerationCap);

/// Older weak submodularity: for all pairs, some F with A ⊊ F ⊆ (B\A)^c has
/// Ψ(α|A) > Ψ(α\F | A∪F), or Ψ(β|B) >= Ψ(β\A^c | B∪A^c).
PropertyReport is_weakly_submodular_old(const PartitionFunction& psi, int cap = kEnumerationCap);

/// Weak submodularity: for all pairs with A^c ∩ B^c nonempty, some nonempty
/// F ⊆ A^c ∩ B^c has Ψ(α|A) >= Ψ(α\F | A∪F) or Ψ(β|B) >= Ψ(β\F | B∪F).
PropertyReport is_weakly_submodular_new(const PartitionFunction& psi, int cap = kEnumerationCap);

}  // namespace widthdual
