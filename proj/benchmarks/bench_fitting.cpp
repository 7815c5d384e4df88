#include <benchmark/benchmark.h>

#include "liaison/fitting.hpp"
#include "liaison/presets.hpp"
#include "liaison/probe.hpp"

namespace {

using namespace liaison;

void BM_Minors(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto m = random_affine_matrix(5, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(m.minors(n / 2));
}
BENCHMARK(BM_Minors)->Arg(4)->Arg(6);

void BM_VanishingPoints(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto ideal = fitting_generators(matrix_preset("embedded-point", q), 4);
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_points(ideal, q, 4));
  state.SetItemsProcessed(state.iterations() * q * q * q * q);
}
BENCHMARK(BM_VanishingPoints)->Arg(3)->Arg(7);

void BM_RankHistogram(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_histogram(3, 3, q));
}
BENCHMARK(BM_RankHistogram)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SmoothnessProbe(benchmark::State& state) {
  const auto u = matrix_preset("line-xyz", 3);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_probe(u, 3, 50, 7));
  state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(BM_SmoothnessProbe)->Unit(benchmark::kMillisecond);

}  // namespace
