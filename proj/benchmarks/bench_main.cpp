#include <benchmark/benchmark.h>

#include <random>

#include "prlab/folkman.hpp"
#include "prlab/omega.hpp"
#include "prlab/rado.hpp"
#include "prlab/search.hpp"

using namespace prlab;

static void BM_SchurThreeColors(benchmark::State& state) {
  auto s = search::SolutionSystem::from_poly(parse_poly("x+y-z"));
  for (auto _ : state) benchmark::DoNotOptimize(search::forcing_number(s, 3, 20).n);
}
BENCHMARK(BM_SchurThreeColors)->Unit(benchmark::kMillisecond);

static void BM_ProgressionTwoColors(benchmark::State& state) {
  auto s = search::SolutionSystem::arithmetic_progression(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search::forcing_number(s, 2, 40).n);
}
BENCHMARK(BM_ProgressionTwoColors)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FolkmanColumns(benchmark::State& state) {
  auto m = folkman::folkman_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rado::columns_condition(m).satisfied);
}
BENCHMARK(BM_FolkmanColumns)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OmegaCanonical(benchmark::State& state) {
  auto t = omega::parse_term("(S1(a)+2*b)*(S2(a*b)+3)*(a+S1(c)+1)");
  for (auto _ : state) benchmark::DoNotOptimize(omega::canonical(t).size());
}
BENCHMARK(BM_OmegaCanonical);

static void BM_Extract325(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<int> col(325);
  for (auto& x : col) x = 1 + static_cast<int>(rng() & 1);
  Coloring c(0, col);
  for (auto _ : state) benchmark::DoNotOptimize(search::vdw325_extract(c).terms);
}
BENCHMARK(BM_Extract325);
BENCHMARK_MAIN();
