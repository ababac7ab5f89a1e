#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "widthdual/closure.hpp"
#include "widthdual/duality.hpp"
#include "widthdual/enumerate.hpp"
#include "widthdual/errors.hpp"
#include "widthdual/properties.hpp"

using namespace widthdual;
using testing_helpers::S;

namespace {

SmallSetSystem from_table(const std::vector<bool>& small) {
  std::vector<Subset> members;
  for (std::size_t s = 0; s < small.size(); ++s) {
    if (small[s]) members.push_back(Subset(static_cast<Subset::Bits>(s)));
  }
  return members.empty() ? SmallSetSystem::nothing() : SmallSetSystem(members);
}

std::vector<bool> to_table(const SmallSetSystem& s, int n) {
  std::vector<bool> out(std::size_t{1} << n);
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = s.is_small(Subset(static_cast<Subset::Bits>(x)));
  return out;
}

// Antichains of nonempty subsets, i.e. minimal-member lists of up-families.
std::vector<UpFamily> all_up_families(int n) {
  std::vector<Subset> nonempty;
  for (Subset s : all_subsets(GroundSet(n))) {
    if (!s.empty()) nonempty.push_back(s);
  }
  std::vector<UpFamily> out;
  for (const auto& a : enumerate_antichains(nonempty, 1000)) out.emplace_back(a);
  return out;
}

const Partition kStar{S({0}), S({1}), S({2, 3})};

}  // namespace

TEST_CASE("small set systems") {
  const GroundSet e(3);
  const auto sing = SmallSetSystem::singletons(e);
  CHECK(sing.is_small(Subset()));
  CHECK(sing.is_small(S({2})));
  CHECK(sing.is_big(S({0, 1})));
  CHECK(SmallSetSystem::nothing().is_big(Subset()));
  CHECK(SmallSetSystem::everything(e).is_small(e.full()));
  CHECK(SmallSetSystem({S({0, 1}), S({0})}).maximal_members() == std::vector<Subset>{S({0, 1})});
  CHECK(sing.minimal_big_sets(e) == std::vector<Subset>{S({0, 1}), S({0, 2}), S({1, 2})});
  CHECK(SmallSetSystem::nothing().minimal_big_sets(e) == std::vector<Subset>{Subset()});
  CHECK(SmallSetSystem::everything(e).minimal_big_sets(e).empty());
}

TEST_CASE("is_small_partition") {
  const GroundSet e(3);
  CHECK(is_small_partition(Partition::singletons(e.full()), SmallSetSystem::singletons(e)));
  CHECK_FALSE(is_small_partition(Partition{S({0, 1}), S({2})}, SmallSetSystem::singletons(e)));
  CHECK(is_small_partition(Partition{S({0, 1}), S({2})}, SmallSetSystem::everything(e)));
}

TEST_CASE("up families") {
  const UpFamily f({S({0, 1}), S({0}), S({2, 3})});
  CHECK(f.minimal_members() == std::vector<Subset>{S({0}), S({2, 3})});
  CHECK(f.contains(S({0, 2})));
  CHECK_FALSE(f.contains(S({1, 2})));
  CHECK(f.meets(kStar));
  // Dropping a minimal member keeps everything strictly above it that is
  // still above another route, and stays upward closed.
  const GroundSet e(4);
  const UpFamily g = f.without(S({0}), e);
  CHECK_FALSE(g.contains(S({0})));
  for (Subset x : all_subsets(e)) {
    if (x.empty()) continue;
    CHECK(g.contains(x) == (f.contains(x) && x != S({0})));
  }
}

TEST_CASE("is_bramble examples") {
  const std::vector<Partition> p{kStar};
  CHECK(is_bramble(UpFamily({S({2, 3})}), p));
  CHECK_FALSE(is_bramble(UpFamily({S({0}), S({1})}), p));
  CHECK_FALSE(is_bramble(UpFamily(), p));
  CHECK(is_bramble(UpFamily(), std::vector<Partition>{}));
  CHECK(is_bramble(SetFamily{S({2, 3})}, p));
  CHECK_FALSE(is_bramble(SetFamily{S({0}), S({1})}, p));
}

TEST_CASE("is_big_bramble examples") {
  const GroundSet e(4);
  const std::vector<Partition> p{kStar};
  CHECK(is_big_bramble(UpFamily({S({2, 3})}), p, SmallSetSystem::singletons(e)));
  CHECK_FALSE(is_big_bramble(UpFamily({S({2})}), p, SmallSetSystem::singletons(e)));
  CHECK_FALSE(is_big_bramble(UpFamily({S({2, 3}), S({2})}), p, SmallSetSystem::singletons(e)));
}

TEST_CASE("check_bramble_lift examples") {
  const GroundSet e(4);
  const std::vector<Partition> p{kStar, Partition{S({0, 1}), S({2}), S({3})}};
  const auto table = closure(e, p);
  CHECK_FALSE(is_bramble(UpFamily({S({2, 3})}), p));
  CHECK(check_bramble_lift(UpFamily({S({2, 3})}), p, table));
  CHECK(check_bramble_lift(UpFamily({S({2, 3}), S({0, 2})}), p, table));
  const std::vector<Partition> single{kStar};
  CHECK(check_bramble_lift(UpFamily({S({2, 3})}), single, closure(e, single)));
}

TEST_CASE("construct_big_bramble examples") {
  const GroundSet e(4);
  const auto sing = SmallSetSystem::singletons(e);
  const auto built = construct_big_bramble(std::vector<Partition>{kStar}, e, sing);
  REQUIRE(built);
  CHECK(built->verified);
  CHECK(is_big_bramble(built->family, std::vector<Partition>{kStar}, sing));
  CHECK(built->family.minimal_members() == std::vector<Subset>{S({2, 3})});

  CHECK_FALSE(construct_big_bramble(std::vector<Partition>{Partition::singletons(e.full())}, e, sing));

  // The empty set of partitions: the greedy pass empties the family, which is
  // a bramble of the empty set.
  const auto vacuous = construct_big_bramble(std::vector<Partition>{}, e, sing);
  REQUIRE(vacuous);
  CHECK(vacuous->family.empty());
  CHECK(vacuous->verified);
}

TEST_CASE("construct_big_bramble result is inclusion-wise minimal") {
  const GroundSet e(4);
  const auto sing = SmallSetSystem::singletons(e);
  const std::vector<Partition> q{kStar, Partition{S({0, 1}), S({2}), S({3})}};
  const auto built = construct_big_bramble(q, e, sing);
  REQUIRE(built);
  for (Subset m : built->family.minimal_members()) {
    const UpFamily smaller = built->family.without(m, e);
    const bool still_meets = std::all_of(q.begin(), q.end(), [&](const Partition& p) { return smaller.meets(p); });
    CHECK_FALSE(still_meets);
  }
}

TEST_CASE("non_dualising_witness") {
  const PointedPartition a(Partition{S({1}), S({2, 3}), S({0})}, S({0}));
  const PointedPartition b(Partition{S({3}), S({0, 1}), S({2})}, S({3}));
  CHECK(non_dualising_witness(a, b).maximal_members() == std::vector<Subset>{S({0, 1}), S({2, 3})});
  const PointedPartition a2(Partition{S({1}), S({2, 3}), S({0})}, S({0}));
  const PointedPartition b2(Partition{S({0, 1}), S({2}), S({3})}, S({3}));
  CHECK(non_dualising_witness(a2, b2) == non_dualising_witness(a, b));
  CHECK_THROWS_AS(non_dualising_witness(a, PointedPartition(Partition{S({0, 1}), S({2, 3})}, S({0, 1}))),
                  InvalidArgument);
}

TEST_CASE("dummy_cover_check") {
  const GroundSet e(4);
  const auto table = closure(e, std::vector<Partition>{kStar, Partition{S({0, 1}), S({2}), S({3})}});
  CHECK(dummy_cover_check(table, SmallSetSystem::singletons(e)));
  CHECK(dummy_cover_check(closure(e, std::vector<Partition>{kStar}), SmallSetSystem::singletons(e)));
  CHECK(dummy_cover_check(table, SmallSetSystem::nothing()));
}

TEST_CASE("big bramble search matches the literal oracle on three elements") {
  const auto all = oracle::all_partitions(3);
  const auto systems = oracle::all_small_systems(3);
  CHECK(systems.size() == 20);
  for (std::uint64_t pick = 0; pick < 32; ++pick) {
    const auto q_masks = testing_helpers::pick_subset(all, pick);
    const auto q = testing_helpers::partitions_from_masks(q_masks);
    for (const auto& table : systems) {
      const SmallSetSystem s = from_table(table);
      CHECK(to_table(s, 3) == table);
      const bool lib = find_big_bramble(q, s).has_value();
      CHECK(lib == oracle::big_bramble_exists_literal(3, q_masks, table));
      CHECK(lib == oracle::big_bramble_exists_antichain(3, q_masks, table));
      if (auto br = find_big_bramble(q, s)) CHECK(is_big_bramble(*br, q, s));
      // Mutual exclusion.
      CHECK_FALSE((lib && has_small_partition(q, s)));
    }
  }
}

TEST_CASE("big bramble search matches the antichain oracle on sampled four-element sets") {
  const auto all = oracle::all_partitions(4);
  const auto systems = oracle::all_small_systems(4);
  CHECK(systems.size() == 168);
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    const auto q_masks = testing_helpers::pick_subset(all, rng() & 0x7fff);
    const auto q = testing_helpers::partitions_from_masks(q_masks);
    for (std::size_t i = 0; i < systems.size(); i += 3) {
      const SmallSetSystem s = from_table(systems[i]);
      const bool lib = find_big_bramble(q, s).has_value();
      CHECK(lib == oracle::big_bramble_exists_antichain(4, q_masks, systems[i]));
      CHECK_FALSE((lib && has_small_partition(q, s)));
    }
  }
}

TEST_CASE("bramble status lifts to the closure on every P over three elements and sampled P over four") {
  for (int n : {3, 4}) {
    const auto all = oracle::all_partitions(n);
    const auto families = all_up_families(n);
    std::mt19937_64 rng(17);
    const int rounds = n == 3 ? 32 : 60;
    for (int round = 0; round < rounds; ++round) {
      const std::uint64_t pick = n == 3 ? static_cast<std::uint64_t>(round) : (rng() & 0x7fff);
      const auto p = testing_helpers::partitions_from_masks(testing_helpers::pick_subset(all, pick));
      const auto table = closure(GroundSet(n), p);
      for (const auto& br : families) CHECK(check_bramble_lift(br, p, table));
    }
  }
}

TEST_CASE("bramble lift with explicit families is applied verbatim") {
  const auto all = oracle::all_partitions(3);
  const auto families = oracle::all_families(3);
  for (std::uint64_t pick = 0; pick < 32; ++pick) {
    const auto p = testing_helpers::partitions_from_masks(testing_helpers::pick_subset(all, pick));
    const auto table = closure(GroundSet(3), p);
    for (const auto& f : families) CHECK(check_bramble_lift(testing_helpers::from_masks(f), p, table));
  }
}

TEST_CASE("big bramble construction on refining sets over four elements") {
  const GroundSet e(4);
  const auto all = oracle::all_partitions(4);
  const auto systems = oracle::all_small_systems(4);
  std::mt19937_64 rng(3);
  int refining_seen = 0;
  for (int round = 0; round < 400 && refining_seen < 25; ++round) {
    auto q = testing_helpers::partitions_from_masks(testing_helpers::pick_subset(all, rng() & 0x7fff));
    // Closures of pushing sets are refining; use them to reach more refining cases.
    if (round % 2 == 0) {
      const auto table = closure(e, q);
      q.assign(table.members().begin(), table.members().end());
    }
    if (!is_refining(q)) continue;
    ++refining_seen;
    for (const auto& table : systems) {
      const SmallSetSystem s = from_table(table);
      if (has_small_partition(q, s)) continue;
      const auto built = construct_big_bramble(q, e, s);
      REQUIRE(built);
      CHECK(built->verified);
    }
  }
  CHECK(refining_seen > 0);
}

TEST_CASE("non-dualising witness on non-refining sets") {
  for (int n : {3, 4}) {
    const auto all = oracle::all_partitions(n);
    std::mt19937_64 rng(8);
    for (int round = 0; round < (n == 3 ? 32 : 80); ++round) {
      const std::uint64_t pick = n == 3 ? static_cast<std::uint64_t>(round) : (rng() & 0x7fff);
      const auto q_masks = testing_helpers::pick_subset(all, pick);
      const auto q = testing_helpers::partitions_from_masks(q_masks);
      const auto report = is_refining(q);
      if (report.holds) continue;
      REQUIRE(report.counterexample);
      REQUIRE(report.counterexample->pointed.size() == 2);
      const SmallSetSystem s = non_dualising_witness(report.counterexample->pointed[0], report.counterexample->pointed[1]);
      CHECK_FALSE(has_small_partition(q, s));
      CHECK_FALSE(oracle::big_bramble_exists_antichain(n, q_masks, to_table(s, n)));
    }
  }
}
