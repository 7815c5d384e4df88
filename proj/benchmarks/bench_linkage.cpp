#include <benchmark/benchmark.h>

#include "liaison/eta_theta.hpp"
#include "liaison/filtration.hpp"
#include "liaison/linkage.hpp"
#include "liaison/presets.hpp"
#include "liaison/propcheck.hpp"

namespace {

using namespace liaison;

void BM_Eta(benchmark::State& state) {
  const auto spec = spec_preset("explicitA");
  for (auto _ : state) benchmark::DoNotOptimize(eta(spec));
}
BENCHMARK(BM_Eta);

void BM_CanonicalFiltration(benchmark::State& state) {
  const auto spec = spec_preset("explicitA");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_filtration(spec));
}
BENCHMARK(BM_CanonicalFiltration);

void BM_Verdict(benchmark::State& state) {
  const auto spec = spec_preset("explicitA");
  for (auto _ : state) benchmark::DoNotOptimize(smoothability_verdict(spec));
}
BENCHMARK(BM_Verdict);

void BM_Explore(benchmark::State& state) {
  const auto spec = spec_preset("hm-minimal");
  const ExploreOptions options{static_cast<int>(state.range(0)), 4, 9};
  for (auto _ : state) benchmark::DoNotOptimize(explore(spec, options));
}
BENCHMARK(BM_Explore)->Arg(2)->Arg(4);

void BM_Propcheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(propcheck(static_cast<std::size_t>(state.range(0)), 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Propcheck)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
