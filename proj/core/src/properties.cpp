#include "widthdual/properties.hpp"

#include <random>
#include <unordered_map>
#include <unordered_set>

#include "widthdual/enumerate.hpp"
#include "widthdual/errors.hpp"

namespace widthdual {

namespace {

class MemberSet {
 public:
  explicit MemberSet(std::span<const Partition> ps) {
    for (const Partition& p : ps) keys_.insert(p.key());
  }
  bool contains(const Partition& p) const { return keys_.count(p.key()) != 0; }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

// Values of Ψ on every partition, so the pair sweeps below can look them up.
class ValueTable {
 public:
  ValueTable(const PartitionFunction& psi, int cap) : partitions_(enumerate_partitions(psi.ground(), std::nullopt, cap)) {
    for (const Partition& p : partitions_) values_.emplace(p.key(), psi(p));
  }
  const Value& operator()(const Partition& p) const { return values_.at(p.key()); }
  const Value& operator()(const PointedPartition& p) const { return (*this)(p.base()); }
  const std::vector<Partition>& partitions() const { return partitions_; }

 private:
  std::vector<Partition> partitions_;
  std::unordered_map<std::uint64_t, Value> values_;
};

std::string describe(const PointedPartition& p) {
  return p.rest().to_string() + "|" + p.pointed().to_string();
}

template <typename Finer>
PropertyReport refining_sweep(const char* name, std::span<const Partition> q, Finer&& finer) {
  const auto forms = pointed_forms(q);
  for (const auto& left : forms) {
    for (const auto& right : forms) {
      if (left.pointed().intersects(right.pointed())) continue;
      const SetFamily cover = covering(left, right);
      bool found = false;
      for (const Partition& candidate : q) {
        if (finer(candidate.family(), cover)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return PropertyReport::fail(name, Counterexample{{left, right}, {}, std::nullopt,
                                                         "no member refines the covering " + cover.to_string()});
      }
    }
  }
  return PropertyReport::pass(name);
}

}  // namespace

PropertyReport is_pushing(std::span<const Partition> p) {
  const MemberSet members(p);
  const auto forms = pointed_forms(p);
  for (const auto& left : forms) {
    for (const auto& right : forms) {
      const Subset ground = left.base().ground();
      const Subset o = ground - left.pointed() - right.pointed();
      if (o.empty()) continue;
      bool pushed = false;
      for_each_nonempty_submask(o, [&](Subset f) {
        if (!pushed && (members.contains(absorb(left, f).base()) || members.contains(absorb(right, f).base()))) {
          pushed = true;
        }
      });
      if (!pushed) {
        return PropertyReport::fail("pushing", Counterexample{{left, right}, {o}, std::nullopt,
                                                              "no nonempty F inside " + o.to_string() +
                                                                  " can be absorbed by either side"});
      }
    }
  }
  return PropertyReport::pass("pushing");
}

PropertyReport is_refining(std::span<const Partition> q) {
  return refining_sweep("refining", q,
                        [](const SetFamily& a, const SetFamily& b) { return is_finer(a, b).has_value(); });
}

PropertyReport is_strongly_refining(std::span<const Partition> q) {
  return refining_sweep("strongly-refining", q,
                        [](const SetFamily& a, const SetFamily& b) { return is_strongly_finer(a, b).has_value(); });
}

PropertyReport is_dualising(const GroundSet& ground, std::span<const Partition> q, const DualisingOptions& options) {
  auto check = [&](const SmallSetSystem& small) -> std::optional<PropertyReport> {
    if (has_small_partition(q, small) || find_big_bramble(q, small)) return std::nullopt;
    return PropertyReport::fail("dualising", Counterexample{{}, {}, small, "neither a small partition nor a big bramble"});
  };

  if (ground.size() <= options.cap) {
    const auto subsets = all_subsets(ground);
    for (const auto& antichain : enumerate_antichains(subsets, options.max_antichains)) {
      if (auto failure = check(SmallSetSystem(antichain))) return *failure;
    }
    return PropertyReport::pass("dualising");
  }
  if (options.samples == 0) {
    throw CapExceeded("dualising sweep over " + std::to_string(ground.size()) + " elements exceeds cap " +
                      std::to_string(options.cap));
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    if (auto failure = check(SmallSetSystem(random_antichain(ground, rng)))) {
      failure->exhaustive = false;
      return *failure;
    }
  }
  PropertyReport r = PropertyReport::pass("dualising");
  r.exhaustive = false;
  return r;
}

PropertyReport is_submodular_pf(const PartitionFunction& psi, int cap) {
  const ValueTable value(psi, cap);
  const Subset ground = psi.ground().full();
  const auto forms = pointed_forms(value.partitions());
  for (const auto& left : forms) {
    for (const auto& right : forms) {
      const Value lhs = value(left) + value(right);
      const Value rhs = value(absorb(left, ground - right.pointed())) + value(absorb(right, ground - left.pointed()));
      if (lhs < rhs) {
        return PropertyReport::fail("submodular", Counterexample{{left, right}, {}, std::nullopt,
                                                                 "Ψ(" + describe(left) + ") + Ψ(" + describe(right) +
                                                                     ") = " + lhs.to_string() + " < " + rhs.to_string()});
      }
    }
  }
  return PropertyReport::pass("submodular");
}

PropertyReport is_weakly_submodular_old(const PartitionFunction& psi, int cap) {
  const ValueTable value(psi, cap);
  const Subset ground = psi.ground().full();
  const auto forms = pointed_forms(value.partitions());
  for (const auto& left : forms) {
    const Value here = value(left);
    for (const auto& right : forms) {
      if (value(right) >= value(absorb(right, ground - left.pointed()))) continue;
      // F = A ∪ G with G a nonempty subset of A^c ∩ B^c.
      const Subset o = ground - left.pointed() - right.pointed();
      bool decreased = false;
      if (!o.empty()) {
        for_each_nonempty_submask(o, [&](Subset g) {
          if (!decreased && here > value(absorb(left, left.pointed() | g))) decreased = true;
        });
      }
      if (!decreased) {
        return PropertyReport::fail("weakly-submodular-old",
                                    Counterexample{{left, right}, {o}, std::nullopt,
                                                   "no strict decrease on the left and Ψ(" + describe(right) +
                                                       ") < Ψ of its absorption of A^c"});
      }
    }
  }
  return PropertyReport::pass("weakly-submodular-old");
}

PropertyReport is_weakly_submodular_new(const PartitionFunction& psi, int cap) {
  const ValueTable value(psi, cap);
  const Subset ground = psi.ground().full();
  const auto forms = pointed_forms(value.partitions());
  for (const auto& left : forms) {
    for (const auto& right : forms) {
      const Subset o = ground - left.pointed() - right.pointed();
      if (o.empty()) continue;
      bool found = false;
      for_each_nonempty_submask(o, [&](Subset f) {
        if (!found && (value(left) >= value(absorb(left, f)) || value(right) >= value(absorb(right, f)))) found = true;
      });
      if (!found) {
        return PropertyReport::fail("weakly-submodular-new",
                                    Counterexample{{left, right}, {o}, std::nullopt,
                                                   "every nonempty F inside " + o.to_string() +
                                                       " strictly increases both sides"});
      }
    }
  }
  return PropertyReport::pass("weakly-submodular-new");
}

}  // namespace widthdual
