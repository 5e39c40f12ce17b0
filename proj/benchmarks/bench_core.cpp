#include <benchmark/benchmark.h>

#include "theta/duality.hpp"
#include "theta/harmonic.hpp"
#include "theta/isotypic.hpp"
#include "theta/oscillator.hpp"

using namespace theta;

static void BM_HarmonicSpace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int d = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_space(n, k, d));
}
BENCHMARK(BM_HarmonicSpace)->Args({3, 1, 6})->Args({3, 2, 4})->Args({4, 2, 4})->Unit(benchmark::kMillisecond);

static void BM_Isotypic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int d = static_cast<int>(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(isotypic_decomposition(n, k, d, SpaceKind::Harmonic));
}
BENCHMARK(BM_Isotypic)->Args({3, 2, 4})->Args({4, 2, 4})->Args({5, 3, 3})->Unit(benchmark::kMillisecond);

static void BM_Relations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_relations(n, k, 6));
}
BENCHMARK(BM_Relations)->Args({3, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_Conservation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conservation_check(n, 4));
}
BENCHMARK(BM_Conservation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GlDuality(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gl_duality_check(3, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GlDuality)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
