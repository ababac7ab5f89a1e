#include <benchmark/benchmark.h>

#include <string>

#include "widthdual/graph.hpp"
#include "widthdual/width.hpp"

using namespace widthdual;

namespace {

Graph cycle(int n) {
  std::string text;
  for (int i = 0; i < n; ++i) text += std::to_string(i) + " " + std::to_string((i + 1) % n) + "\n";
  return parse_graph(text);
}

Graph grid(int rows, int cols) {
  std::string text;
  const auto id = [cols](int r, int c) { return std::to_string(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) text += id(r, c) + " " + id(r, c + 1) + "\n";
      if (r + 1 < rows) text += id(r, c) + " " + id(r + 1, c) + "\n";
    }
  }
  return parse_graph(text);
}

void BM_Width(benchmark::State& state, Graph g, Parameter p) {
  int w = 0;
  for (auto _ : state) {
    w = compute_width(g, p);
    benchmark::DoNotOptimize(w);
  }
  state.counters["width"] = w;
}
BENCHMARK_CAPTURE(BM_Width, tw_cycle8, cycle(8), Parameter::kTreewidth)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Width, bw_cycle8, cycle(8), Parameter::kBranchwidth)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Width, tw_grid2x4, grid(2, 4), Parameter::kTreewidth)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Width, rw_cycle8, cycle(8), Parameter::kRankwidth)->Unit(benchmark::kMillisecond);

void BM_CertifyBramble(benchmark::State& state) {
  const Graph g = cycle(6);
  for (auto _ : state) {
    const Certificate c = certify(g, Parameter::kTreewidth, 1);
    benchmark::DoNotOptimize(c.bramble);
  }
}
BENCHMARK(BM_CertifyBramble)->Unit(benchmark::kMillisecond);

}  // namespace
