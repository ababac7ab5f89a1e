#include <benchmark/benchmark.h>

#include <random>

#include "widthdual/enumerate.hpp"
#include "widthdual/properties.hpp"

using namespace widthdual;

namespace {

std::vector<std::vector<Partition>> samples(int n, int count) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution keep(0.5);
  const auto all = enumerate_partitions(GroundSet(n));
  std::vector<std::vector<Partition>> out(static_cast<std::size_t>(count));
  for (auto& q : out) {
    for (const auto& p : all) {
      if (keep(rng)) q.push_back(p);
    }
  }
  return out;
}

void BM_IsRefining(benchmark::State& state) {
  const auto qs = samples(static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    int holds = 0;
    for (const auto& q : qs) holds += is_refining(q).holds ? 1 : 0;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_IsRefining)->DenseRange(3, 5);

void BM_IsPushing(benchmark::State& state) {
  const auto qs = samples(static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    int holds = 0;
    for (const auto& q : qs) holds += is_pushing(q).holds ? 1 : 0;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_IsPushing)->DenseRange(3, 5);

void BM_IsDualising(benchmark::State& state) {
  const GroundSet e(4);
  const auto qs = samples(4, 16);
  for (auto _ : state) {
    int holds = 0;
    for (const auto& q : qs) holds += is_dualising(e, q).holds ? 1 : 0;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_IsDualising)->Unit(benchmark::kMillisecond);

}  // namespace
