#include "mulex/analysis.hpp"
#include "mulex/containers.hpp"
#include "mulex/multigraph.hpp"
#include "mulex/search.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mulex;

static void BM_Extremal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal(n, 4, 15).value);
}
BENCHMARK(BM_Extremal)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ExtremalUnpruned(benchmark::State& state) {
  SearchOptions o;
  o.prune = false;
  for (auto _ : state) benchmark::DoNotOptimize(extremal(5, 4, 15, o).value);
}
BENCHMARK(BM_ExtremalUnpruned)->Unit(benchmark::kMillisecond);

static void BM_Count(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_F(n, 4, 9).count);
}
BENCHMARK(BM_Count)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CanonicalKey(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<Weight> w(n * (n - 1) / 2);
  for (auto& x : w) x = static_cast<Weight>(d(rng));
  const Multigraph g(n, w);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

static void BM_Constants(benchmark::State& state) {
  const auto bits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constants_from(log_bounds(bits)).gamma.width());
}
BENCHMARK(BM_Constants)->Arg(60)->Arg(240)->Unit(benchmark::kMicrosecond);

static void BM_FindConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_constants().M1);
}
BENCHMARK(BM_FindConstants)->Unit(benchmark::kMillisecond);

static void BM_Codegree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(codegree_profile(n, 3, 2, Rational(1, 2)).delta);
}
BENCHMARK(BM_Codegree)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
