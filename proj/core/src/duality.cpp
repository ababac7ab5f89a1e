#include "widthdual/duality.hpp"

#include <algorithm>

#include "widthdual/enumerate.hpp"
#include "widthdual/errors.hpp"

namespace widthdual {

SmallSetSystem::SmallSetSystem(std::vector<Subset> generators) : maximal_(maximal_sets(generators)) {}

SmallSetSystem SmallSetSystem::singletons(const GroundSet& ground) {
  std::vector<Subset> gens;
  for (int e = 0; e < ground.size(); ++e) gens.push_back(Subset::singleton(e));
  return SmallSetSystem(std::move(gens));
}

SmallSetSystem SmallSetSystem::everything(const GroundSet& ground) { return SmallSetSystem({ground.full()}); }

bool SmallSetSystem::is_small(Subset s) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [s](Subset m) { return s.subset_of(m); });
}

std::vector<Subset> SmallSetSystem::minimal_big_sets(const GroundSet& ground) const {
  std::vector<Subset> big;
  for (Subset s : all_subsets(ground)) {
    if (is_big(s)) big.push_back(s);
  }
  return minimal_sets(big);
}

UpFamily::UpFamily(std::vector<Subset> generators) : minimal_(minimal_sets(generators)) {}

bool UpFamily::contains(Subset s) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [s](Subset m) { return m.subset_of(s); });
}

bool UpFamily::meets(const Partition& p) const {
  return std::any_of(p.blocks().begin(), p.blocks().end(), [this](Subset b) { return contains(b); });
}

UpFamily UpFamily::without(Subset minimal_member, const GroundSet& ground) const {
  // Members strictly above the removed set all contain one of its one-element
  // extensions, so those extensions regenerate what stays.
  std::vector<Subset> gens;
  for (Subset m : minimal_) {
    if (m != minimal_member) gens.push_back(m);
  }
  for (int e = 0; e < ground.size(); ++e) {
    if (!minimal_member.contains(e)) gens.push_back(minimal_member | Subset::singleton(e));
  }
  return UpFamily(std::move(gens));
}

bool is_small_partition(const Partition& p, const SmallSetSystem& small) {
  return std::all_of(p.blocks().begin(), p.blocks().end(), [&](Subset b) { return small.is_small(b); });
}

bool has_small_partition(std::span<const Partition> q, const SmallSetSystem& small) {
  return std::any_of(q.begin(), q.end(), [&](const Partition& p) { return is_small_partition(p, small); });
}

namespace {

bool pairwise_intersecting(std::span<const Subset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i; j < sets.size(); ++j) {
      if (!sets[i].intersects(sets[j])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_bramble(const UpFamily& family, std::span<const Partition> partitions) {
  // Supersets of intersecting sets intersect, so checking the minimal
  // members (each against itself too, which rules out ∅) is enough.
  if (!pairwise_intersecting(family.minimal_members())) return false;
  return std::all_of(partitions.begin(), partitions.end(), [&](const Partition& p) { return family.meets(p); });
}

bool is_bramble(const SetFamily& family, std::span<const Partition> partitions) {
  const auto sets = family.blocks();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i].intersects(sets[j])) return false;
    }
  }
  return std::all_of(partitions.begin(), partitions.end(), [&](const Partition& p) {
    return std::any_of(p.blocks().begin(), p.blocks().end(), [&](Subset b) { return family.contains(b); });
  });
}

bool is_big_bramble(const UpFamily& family, std::span<const Partition> partitions, const SmallSetSystem& small) {
  const auto& mins = family.minimal_members();
  if (std::any_of(mins.begin(), mins.end(), [&](Subset m) { return small.is_small(m); })) return false;
  return is_bramble(family, partitions);
}

bool check_bramble_lift(const UpFamily& family, std::span<const Partition> axioms, const ClosureTable& table) {
  return is_bramble(family, axioms) == is_bramble(family, table.members());
}

bool check_bramble_lift(const SetFamily& family, std::span<const Partition> axioms, const ClosureTable& table) {
  return is_bramble(family, axioms) == is_bramble(family, table.members());
}

std::optional<BrambleConstruction> construct_big_bramble(const MeetsAll& meets_all, const GroundSet& ground,
                                                         const SmallSetSystem& small,
                                                         const std::function<bool(const UpFamily&)>& verify) {
  UpFamily current(small.minimal_big_sets(ground));
  if (!meets_all(current)) return std::nullopt;
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Subset m : current.minimal_members()) {
      UpFamily candidate = current.without(m, ground);
      if (meets_all(candidate)) {
        current = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  const bool ok = verify(current);
  return BrambleConstruction{std::move(current), ok};
}

std::optional<BrambleConstruction> construct_big_bramble(std::span<const Partition> q, const GroundSet& ground,
                                                         const SmallSetSystem& small) {
  auto meets_all = [q](const UpFamily& f) {
    return std::all_of(q.begin(), q.end(), [&](const Partition& p) { return f.meets(p); });
  };
  auto verify = [q, &small](const UpFamily& f) { return is_big_bramble(f, q, small); };
  return construct_big_bramble(meets_all, ground, small, verify);
}

namespace {

bool choose_blocks(const std::vector<std::vector<Subset>>& options, std::size_t i, std::vector<Subset>& chosen) {
  if (i == options.size()) return true;
  const auto& opts = options[i];
  // Already met by an earlier choice.
  for (Subset b : opts) {
    if (std::find(chosen.begin(), chosen.end(), b) != chosen.end()) return choose_blocks(options, i + 1, chosen);
  }
  for (Subset b : opts) {
    if (!std::all_of(chosen.begin(), chosen.end(), [b](Subset c) { return c.intersects(b); })) continue;
    chosen.push_back(b);
    if (choose_blocks(options, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<UpFamily> find_big_bramble(std::span<const Partition> q, const SmallSetSystem& small) {
  std::vector<std::vector<Subset>> options;
  options.reserve(q.size());
  for (const Partition& p : q) {
    std::vector<Subset> big;
    for (Subset b : p.blocks()) {
      if (small.is_big(b)) big.push_back(b);
    }
    if (big.empty()) return std::nullopt;
    options.push_back(std::move(big));
  }
  std::stable_sort(options.begin(), options.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subset> chosen;
  if (!choose_blocks(options, 0, chosen)) return std::nullopt;
  return UpFamily(std::move(chosen));
}

SmallSetSystem non_dualising_witness(const PointedPartition& left, const PointedPartition& right) {
  if (left.pointed().intersects(right.pointed())) {
    throw InvalidArgument("non_dualising_witness: pointed blocks " + left.pointed().to_string() + " and " +
                          right.pointed().to_string() + " intersect");
  }
  const SetFamily cover = covering(left, right);
  return SmallSetSystem(std::vector<Subset>(cover.begin(), cover.end()));
}

bool dummy_cover_check(const ClosureTable& table, const SmallSetSystem& small) {
  const bool small_side = has_small_partition(table.members(), small);
  const bool big_side = std::all_of(table.members().begin(), table.members().end(), [&](const Partition& p) {
    return std::any_of(p.blocks().begin(), p.blocks().end(), [&](Subset b) { return small.is_big(b); });
  });
  return small_side != big_side;
}

}  // namespace widthdual
