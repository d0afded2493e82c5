#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "posort/posort.hpp"

using namespace posort;

namespace {

void BM_HwangLin(benchmark::State& state) {
  const int nx = static_cast<int>(state.range(0));
  const int ny = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  LinearOrder order(nx + ny);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Chain x;
  Chain y;
  for (Element v : order) (v < nx ? x : y).push_back(v);
  HiddenOrderOracle o(order, Poset(nx + ny));
  for (auto _ : state) benchmark::DoNotOptimize(hwang_lin_merge(x, y, o));
}
BENCHMARK(BM_HwangLin)->Args({1024, 16})->Args({1024, 256})->Args({1024, 1024});

void BM_ConvexEntropy(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto inst = random_width2_poset(static_cast<int>(state.range(0)), rng);
  const auto g = build_two_chain_cover(inst.poset, inst.a, inst.b).graph();
  for (auto _ : state) benchmark::DoNotOptimize(convex_bipartite_entropy(g));
}
BENCHMARK(BM_ConvexEntropy)->Arg(32)->Arg(128)->Arg(512);

void BM_Mupi(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto inst = random_width2_poset(static_cast<int>(state.range(0)), rng);
  const auto order = sample_linear_extension(inst.poset, rng);
  const auto setup = prepare_mupi(inst.poset, inst.a, inst.b);
  for (auto _ : state) {
    HiddenOrderOracle o(order, inst.poset);
    benchmark::DoNotOptimize(run_mupi(setup, o));
  }
}
BENCHMARK(BM_Mupi)->Arg(64)->Arg(256)->Arg(1024);

void BM_Sorter(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Poset p = random_poset(n, 4.0 / n, 4);
  std::mt19937_64 rng(5);
  const auto order = sample_linear_extension(p, rng);
  std::int64_t comparisons = 0;
  for (auto _ : state) {
    HiddenOrderOracle o(order, p);
    comparisons = run_sorter(algo, p, o).comparisons;
  }
  state.counters["comparisons"] = static_cast<double>(comparisons);
  state.SetLabel(algorithm_name(algo));
}
BENCHMARK(BM_Sorter)->ArgsProduct({{0, 1, 2, 3}, {64, 256}});

void BM_CountExtensions(benchmark::State& state) {
  const Poset p = random_poset(static_cast<int>(state.range(0)), 0.15, 6);
  for (auto _ : state) benchmark::DoNotOptimize(count_linear_extensions(p));
}
BENCHMARK(BM_CountExtensions)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
