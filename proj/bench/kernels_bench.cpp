// Serial reference vs OpenMP kernels on the brute-force pair enumerations.

#include <benchmark/benchmark.h>

#include "latpair/kernels.hpp"

namespace k = latpair::kernels;

namespace {

void BM_SameEndpointSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::same_endpoint_pairs(n, n / 2));
}

void BM_SameEndpointParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k::parallel::same_endpoint_pairs(n, n / 2));
  state.counters["threads"] = k::parallel::max_threads();
}

void BM_FreeWalkSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::free_walk_pairs(n));
}

void BM_FreeWalkParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k::parallel::free_walk_pairs(n));
  state.counters["threads"] = k::parallel::max_threads();
}

void BM_SameEndFreeSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::free_walk_pairs_same_end(n));
}

void BM_SameEndFreeParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k::parallel::free_walk_pairs_same_end(n));
  state.counters["threads"] = k::parallel::max_threads();
}

}  // namespace

BENCHMARK(BM_SameEndpointSerial)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SameEndpointParallel)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FreeWalkSerial)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FreeWalkParallel)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SameEndFreeSerial)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SameEndFreeParallel)->DenseRange(6, 11, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
