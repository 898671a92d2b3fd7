// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "antisym/parallel.hpp"
#include "antisym/polyalg.hpp"
#include "antisym/verify.hpp"

using namespace antisym;

namespace {

void BM_DeterminantSerial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(slater_determinant_serial(d, N, WorkBudget{}));
}

void BM_DeterminantParallel(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(slater_determinant(d, N, WorkBudget{}));
  state.counters["threads"] = parallel::max_threads();
}

void BM_LaplacianSerial(benchmark::State& state) {
  const auto psi = slater_determinant_serial(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_serial(psi));
  state.counters["terms"] = static_cast<double>(psi.size());
}

void BM_LaplacianParallel(benchmark::State& state) {
  const auto psi = slater_determinant_serial(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(psi));
  state.counters["terms"] = static_cast<double>(psi.size());
}

void BM_GapSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gap_series(3, state.range(0)));
}

void BM_OracleSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(static_cast<int>(state.range(0)), 200000));
}

#define DET_SIZES Args({1, 7})->Args({1, 8})->Args({2, 6})->Args({3, 4})

BENCHMARK(BM_DeterminantSerial)->DET_SIZES->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->DET_SIZES->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplacianSerial)->DET_SIZES->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplacianParallel)->DET_SIZES->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GapSeries)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSweep)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
