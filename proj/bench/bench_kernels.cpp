// Parallel kernels against their serial twins.

#include <benchmark/benchmark.h>

#include <random>

#include "stab2cy/pimod.hpp"

using namespace stab2cy;

namespace {

PiModule bench_module(int n) {
  // semisimple modules have the most subobjects at a given dimension
  if (n == 0) return semisimple_module(2, 2);
  if (n == 1) return semisimple_module(3, 1);
  std::mt19937_64 rng(11);
  return random_module(3, 3, rng);
}

void BM_Subobjects(benchmark::State& state) {
  const PiModule M = bench_module(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(list_subobjects(M));
}

void BM_SubobjectsSerial(benchmark::State& state) {
  const PiModule M = bench_module(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(list_subobjects_serial(M));
}

void BM_Enumerate(benchmark::State& state) {
  const int d0 = static_cast<int>(state.range(0)), d1 = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_modules(d0, d1));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int d0 = static_cast<int>(state.range(0)), d1 = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_modules_serial(d0, d1));
}

}  // namespace

BENCHMARK(BM_Subobjects)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubobjectsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Enumerate)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
