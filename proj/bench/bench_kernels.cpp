// Serial reference routines against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "killing/elimination.hpp"
#include "killing/kernel_analysis.hpp"

using namespace killing;

namespace {

const SparseMatrix& explorer_matrix() {
  static const SparseMatrix m = stacked_PQ(4, 3, 1, 8);
  return m;
}

void BM_NullspaceSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(explorer_matrix()).dim());
}

void BM_NullspaceParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_parallel(explorer_matrix(), jobs).dim());
}

void BM_RankSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rank(explorer_matrix()));
}

void BM_RankParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(explorer_matrix(), jobs));
}

const TableRequest kGrid{{1, 2, 3, 4}, {0, 1, 2, 3}, {}, std::nullopt};

void BM_TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_table_serial(kGrid).size());
}

void BM_TableParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_table(kGrid, jobs).size());
}

}  // namespace

BENCHMARK(BM_NullspaceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NullspaceParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_TableParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
