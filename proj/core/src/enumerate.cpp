#include "widthdual/enumerate.hpp"

#include <algorithm>
#include <string>

#include "widthdual/errors.hpp"

namespace widthdual {

namespace {

void rgs_walk(int n, int pos, int blocks_used, std::vector<Subset>& blocks, std::optional<int> max_blocks,
              const std::function<void(const Partition&)>& fn) {
  if (pos == n) {
    fn(Partition(std::vector<Subset>(blocks.begin(), blocks.begin() + blocks_used)));
    return;
  }
  const Subset e = Subset::singleton(pos);
  for (int b = 0; b < blocks_used; ++b) {
    blocks[b] |= e;
    rgs_walk(n, pos + 1, blocks_used, blocks, max_blocks, fn);
    blocks[b] -= e;
  }
  if (!max_blocks || blocks_used < *max_blocks) {
    blocks[blocks_used] = e;
    rgs_walk(n, pos + 1, blocks_used + 1, blocks, max_blocks, fn);
    blocks[blocks_used] = Subset();
  }
}

void antichain_walk(std::span<const Subset> cands, std::size_t i, std::vector<Subset>& current,
                    std::vector<std::vector<Subset>>& out, std::size_t max_count) {
  if (i == cands.size()) {
    if (out.size() >= max_count) {
      throw CapExceeded("more than " + std::to_string(max_count) + " antichains");
    }
    out.push_back(current);
    return;
  }
  antichain_walk(cands, i + 1, current, out, max_count);
  const Subset s = cands[i];
  const bool comparable = std::any_of(current.begin(), current.end(),
                                      [s](Subset t) { return s.subset_of(t) || t.subset_of(s); });
  if (!comparable) {
    current.push_back(s);
    antichain_walk(cands, i + 1, current, out, max_count);
    current.pop_back();
  }
}

}  // namespace

void for_each_partition(const GroundSet& ground, const std::function<void(const Partition&)>& fn,
                        std::optional<int> max_blocks, int cap) {
  if (ground.size() > cap) {
    throw CapExceeded("partition enumeration over " + std::to_string(ground.size()) +
                      " elements exceeds cap " + std::to_string(cap));
  }
  std::vector<Subset> blocks(static_cast<std::size_t>(ground.size()));
  rgs_walk(ground.size(), 0, 0, blocks, max_blocks, fn);
}

std::vector<Partition> enumerate_partitions(const GroundSet& ground, std::optional<int> max_blocks, int cap) {
  std::vector<Partition> out;
  for_each_partition(ground, [&](const Partition& p) { out.push_back(p); }, max_blocks, cap);
  return out;
}

std::vector<std::vector<Subset>> enumerate_antichains(std::span<const Subset> candidates, std::size_t max_count) {
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> current;
  antichain_walk(candidates, 0, current, out, max_count);
  for (auto& a : out) a = canonical(std::move(a));
  return out;
}

std::vector<Subset> all_subsets(const GroundSet& ground) {
  std::vector<Subset> out;
  const Subset::Bits limit = ground.full().bits();
  for (Subset::Bits b = 0;; ++b) {
    out.emplace_back(b);
    if (b == limit) break;
  }
  return out;
}

std::vector<Subset> maximal_sets(std::span<const Subset> sets) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (sets[j] == sets[i]) {
        dominated = j < i;  // keep the first copy of duplicates
      } else {
        dominated = sets[i].subset_of(sets[j]);
      }
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return canonical(std::move(out));
}

std::vector<Subset> minimal_sets(std::span<const Subset> sets) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (sets[j] == sets[i]) {
        dominated = j < i;
      } else {
        dominated = sets[j].subset_of(sets[i]);
      }
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return canonical(std::move(out));
}

std::vector<Subset> random_antichain(const GroundSet& ground, std::mt19937_64& rng) {
  const Subset::Bits limit = ground.full().bits();
  std::uniform_int_distribution<Subset::Bits> pick(0, limit);
  std::uniform_int_distribution<int> tries(0, 2 * ground.size());
  std::vector<Subset> chosen;
  const int n = tries(rng);
  for (int i = 0; i < n; ++i) {
    const Subset s(pick(rng));
    const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                        [s](Subset t) { return s.subset_of(t) || t.subset_of(s); });
    if (!comparable) chosen.push_back(s);
  }
  return canonical(std::move(chosen));
}

}  // namespace widthdual
