// Parallel kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include <random>

#include "rootrel/circulant.hpp"
#include "rootrel/oracle.hpp"
#include "rootrel/sampling.hpp"

using namespace rootrel;

namespace {

FractalCirculant random_circulant(unsigned m, unsigned d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::size_t n = 1;
  for (unsigned i = 0; i < d; ++i) n *= m;
  std::vector<RatScalar> a(n);
  for (auto& x : a) x = entry(rng);
  return FractalCirculant(m, d, std::move(a));
}

void BM_CorankDft(benchmark::State& state) {
  const auto F = random_circulant(5, static_cast<unsigned>(state.range(0)), 1);
  const auto kernel = state.range(1) ? CirculantKernel::parallel : CirculantKernel::serial;
  for (auto _ : state) benchmark::DoNotOptimize(corank_dft(F, kernel));
}
BENCHMARK(BM_CorankDft)->ArgsProduct({{2, 3, 4}, {0, 1}})->ArgNames({"depth", "parallel"})->Unit(benchmark::kMillisecond);

void BM_CorankBareiss(benchmark::State& state) {
  const auto F = random_circulant(5, static_cast<unsigned>(state.range(0)), 2);
  const auto kernel = state.range(1) ? CirculantKernel::parallel : CirculantKernel::serial;
  for (auto _ : state) benchmark::DoNotOptimize(corank_exact(F, kernel));
}
BENCHMARK(BM_CorankBareiss)->ArgsProduct({{2, 3}, {0, 1}})->ArgNames({"depth", "parallel"})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const IntPoly f{1, 0, -2, -6, -2, 0, 1};
  const auto kernel = state.range(1) ? Kernel::parallel : Kernel::serial;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_search(f, static_cast<int>(state.range(0)), 100, kernel));
}
BENCHMARK(BM_Oracle)->ArgsProduct({{1, 2}, {0, 1}})->ArgNames({"bound", "parallel"})->Unit(benchmark::kMillisecond);

void BM_Stats(benchmark::State& state) {
  SampleSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.H = 10;
  spec.count = 50;
  spec.seed = 3;
  const auto kernel = state.range(1) ? StatsKernel::parallel : StatsKernel::serial;
  for (auto _ : state) benchmark::DoNotOptimize(run_stats(spec, kernel));
}
BENCHMARK(BM_Stats)->ArgsProduct({{6, 9}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
