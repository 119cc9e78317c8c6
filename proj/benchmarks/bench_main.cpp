#include <benchmark/benchmark.h>

#include <random>

#include "a4strat/modular_forms.hpp"
#include "a4strat/orbit.hpp"
#include "a4strat/strata.hpp"
#include "a4strat/theta.hpp"

using namespace a4strat;

static void BM_EvenThetaConstants(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto tau = random_siegel_point(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(even_theta_constants(tau, 1e-12));
}
BENCHMARK(BM_EvenThetaConstants)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_SchottkyGenus4(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto tau = random_siegel_point(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(schottky_form(tau, 1e-12));
}
BENCHMARK(BM_SchottkyGenus4)->Unit(benchmark::kMillisecond);

static void BM_OrbitProfile(benchmark::State& state) {
  const auto tuple = product_split_tuple(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_profile(tuple));
}
BENCHMARK(BM_OrbitProfile)->Arg(1)->Arg(2);

static void BM_OrbitBfs(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto evens = all_characteristics(g, ParityFilter::kEven);
  const CharTuple t(g, {evens[0], evens[1], evens[2]});
  for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs(t));
}
BENCHMARK(BM_OrbitBfs)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DetectSplit(benchmark::State& state) {
  const auto i2 = product_split_tuple(4, 2);
  const std::vector<Characteristic> set(i2.begin(), i2.end());
  for (auto _ : state) benchmark::DoNotOptimize(detect_split(set, 4, 2));
}
BENCHMARK(BM_DetectSplit)->Unit(benchmark::kMicrosecond);

static void BM_ClassifyIdentity(benchmark::State& state) {
  const auto tau = scalar_point(4);
  for (auto _ : state) benchmark::DoNotOptimize(classify(tau));
}
BENCHMARK(BM_ClassifyIdentity)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
