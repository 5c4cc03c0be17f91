#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "uimpact/stats.hpp"

using namespace uimpact;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed, bool ties) {
  std::mt19937_64 rng(seed);
  std::vector<double> values(n);
  if (ties) {
    std::uniform_int_distribution<int> dist(0, 50);
    for (auto& v : values) v = dist(rng);
  } else {
    std::uniform_real_distribution<double> dist(0, 1);
    for (auto& v : values) v = dist(rng);
  }
  return values;
}

}  // namespace

static void BM_RankWithTies(benchmark::State& state) {
  const auto values = random_values(static_cast<std::size_t>(state.range(0)), 1, true);
  for (auto _ : state) {
    auto ranks = stats::rank_with_ties(values);
    benchmark::DoNotOptimize(ranks);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankWithTies)->Range(64, 1 << 15)->Complexity();

// 3146 journals is the joined sample size the tool is expected to handle
static void BM_SpearmanTApprox(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_values(n, 2, false);
  const auto y = random_values(n, 3, false);
  for (auto _ : state) {
    auto result = stats::spearman(x, y);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SpearmanTApprox)->Arg(3146)->Arg(10000);

// n <= 10 pays for 100k Monte-Carlo draws
static void BM_SpearmanMonteCarlo(benchmark::State& state) {
  const auto x = random_values(10, 4, false);
  const auto y = random_values(10, 5, false);
  for (auto _ : state) {
    auto result = stats::spearman(x, y);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SpearmanMonteCarlo);

static void BM_SpearmanExactPermutation(benchmark::State& state) {
  const auto x = random_values(7, 6, false);
  const auto y = random_values(7, 7, false);
  for (auto _ : state) {
    auto result = stats::spearman(x, y);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SpearmanExactPermutation);

static void BM_OlsRegression(benchmark::State& state) {
  std::vector<stats::Point> points{
      {0.032, -0.470}, {0.202, -0.225}, {0.180, -0.147}, {0.888, 0.228}};
  for (auto _ : state) {
    auto fit = stats::ols_regression(points);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_OlsRegression);
