#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "circsort/oracle.hpp"
#include "circsort/random.hpp"
#include "circsort/sorter.hpp"

namespace {

std::vector<circsort::Permutation> sample_permutations(int n, int count) {
  std::mt19937_64 rng(42);
  std::vector<circsort::Permutation> perms;
  perms.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    perms.push_back(circsort::random_permutation(n, rng));
  return perms;
}

void BM_OptimalSort(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = sample_permutations(n, 16);
  std::size_t index = 0;
  for (auto _ : state) {
    auto seq = circsort::optimal_sort(perms[index++ % perms.size()]);
    benchmark::DoNotOptimize(seq);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_OptimalSort)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_BubbleSort(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = sample_permutations(n, 16);
  std::size_t index = 0;
  for (auto _ : state) {
    auto seq = circsort::bubble_sort(perms[index++ % perms.size()]);
    benchmark::DoNotOptimize(seq);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BubbleSort)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_BidirectionalDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = sample_permutations(n, 16);
  std::size_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        circsort::bfs_distance(perms[index++ % perms.size()]));
  }
}
BENCHMARK(BM_BidirectionalDistance)->DenseRange(6, 9, 1);

void BM_BuildDistanceTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = circsort::build_distance_table(n);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BuildDistanceTable)->DenseRange(6, 8, 1);

void BM_NetSwapCountFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const auto perm = circsort::random_permutation(n, rng);
  const auto d = circsort::normalize(perm, circsort::initial_displacement(perm));
  for (auto _ : state) {
    long long total = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) total += circsort::net_swap_count(perm, d, i, j);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_NetSwapCountFormula)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
