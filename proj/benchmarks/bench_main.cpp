#include <benchmark/benchmark.h>

#include <random>

#include "cvec/fixtures.hpp"
#include "cvec/laurent.hpp"
#include "cvec/mutation.hpp"
#include "cvec/silting.hpp"

using namespace cvec;

static void BM_ExploreMarkovDepth(benchmark::State& state) {
  const IntMatrix b = fixture_matrix("markov");
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(explore(b, ExploreOptions{1000000, false, depth}).seeds.size());
}
BENCHMARK(BM_ExploreMarkovDepth)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExploreA3Canonical(benchmark::State& state) {
  const IntMatrix b = fixture_matrix("a3");
  for (auto _ : state) benchmark::DoNotOptimize(explore(b, ExploreOptions{1000, true, std::nullopt}).seeds.size());
}
BENCHMARK(BM_ExploreA3Canonical)->Unit(benchmark::kMillisecond);

static void BM_LaurentWalkMarkov(benchmark::State& state) {
  const IntMatrix b = fixture_matrix("markov");
  std::vector<std::size_t> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(static_cast<std::size_t>(i % 3));
  for (auto _ : state) benchmark::DoNotOptimize(walk(b, word).variables.size());
}
BENCHMARK(BM_LaurentWalkMarkov)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_SiltingEnumeration(benchmark::State& state, const char* name, std::size_t budget) {
  for (auto _ : state) {
    AlgebraPtr alg = Algebra::create(fixture_algebra(name));
    benchmark::DoNotOptimize(enumerate_silting(alg, budget).records.size());
  }
}
BENCHMARK_CAPTURE(BM_SiltingEnumeration, a3, "a3", 100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SiltingEnumeration, nakayama3, "nakayama3", 100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SiltingEnumeration, kronecker10, "kronecker", 10)->Unit(benchmark::kMillisecond);

static void BM_RatKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3), sparse(0, 4);
  RatMatrix m(n, n + 4);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sparse(rng) == 0) m(i, j) = coeff(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rat_kernel(m).cols());
}
BENCHMARK(BM_RatKernel)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
