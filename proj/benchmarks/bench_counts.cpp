#include <benchmark/benchmark.h>

#include "gapset/bounds.hpp"
#include "gapset/enumerate.hpp"

namespace {

void BM_TreeCount(benchmark::State& state) {
  const gapset::Int genus = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gapset::count_n(genus));
  }
}
BENCHMARK(BM_TreeCount)->Arg(14)->Arg(17)->Arg(20);

void BM_NaiveEnumeration(benchmark::State& state) {
  const gapset::Int genus = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gapset::enumerate_gapsets_naive(genus).size());
  }
}
BENCHMARK(BM_NaiveEnumeration)->Arg(8)->Arg(10)->Arg(12);

void BM_FamilyColumn(benchmark::State& state) {
  const gapset::Int g_max = state.range(0);
  const gapset::Int level = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gapset::count_gamma_prime_column(g_max, level));
  }
}
BENCHMARK(BM_FamilyColumn)->Args({25, 1})->Args({30, 1})->Args({40, 2})->Args({40, 3});

void BM_VerifyCell(benchmark::State& state) {
  const gapset::Int g = state.range(0);
  const gapset::Int level = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gapset::verify_counting_bounds(g, level).passed());
  }
}
BENCHMARK(BM_VerifyCell)->Args({18, 1})->Args({24, 2});

}  // namespace

BENCHMARK_MAIN();
