// SPDX-License-Identifier: Apache-2.0

#include <sombor/enumeration.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_CountMolecularTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t total = 0;
  for (auto _ : state) {
    total = sombor::enumerate_molecular_trees(n).count();
    benchmark::DoNotOptimize(total);
  }
  state.counters["trees"] = static_cast<double>(total);
  state.counters["trees/s"] =
      benchmark::Counter(static_cast<double>(total), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_CountMolecularTrees)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_CountFreeTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sombor::enumerate_trees(n).count());
}
BENCHMARK(BM_CountFreeTrees)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

// Builds every Graph rather than only counting.
void BM_MaterialiseMolecularTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t edges = 0;
    sombor::enumerate_molecular_trees(n).for_each([&](const sombor::Graph& g) { edges += g.size(); });
    benchmark::DoNotOptimize(edges);
  }
}
BENCHMARK(BM_MaterialiseMolecularTrees)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_ArgmaxSo2(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  const auto stream = sombor::enumerate_molecular_trees(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sombor::extreme_so2(stream, true, threads).value);
  }
}
BENCHMARK(BM_ArgmaxSo2)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
