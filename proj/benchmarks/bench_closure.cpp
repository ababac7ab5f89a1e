#include <benchmark/benchmark.h>

#include <random>

#include "widthdual/closure.hpp"
#include "widthdual/enumerate.hpp"

using namespace widthdual;

namespace {

// A seeded sparse axiom set on n elements.
std::vector<Partition> sparse_axioms(int n, double density) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution keep(density);
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions(GroundSet(n))) {
    if (keep(rng)) out.push_back(p);
  }
  return out;
}

void BM_Closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GroundSet e(n);
  const auto axioms = sparse_axioms(n, 0.3);
  std::size_t members = 0;
  for (auto _ : state) {
    const auto table = closure(e, axioms);
    members = table.size();
    benchmark::DoNotOptimize(members);
  }
  state.counters["axioms"] = static_cast<double>(axioms.size());
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_Closure)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartitions(benchmark::State& state) {
  const GroundSet e(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_partition(e, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace
