#include <benchmark/benchmark.h>

#include "defectkit/language.hpp"
#include "defectkit/morphism.hpp"
#include "defectkit/pal_index.hpp"
#include "defectkit/verifier.hpp"

using namespace defectkit;

namespace {

Morphism thue_morse() { return Morphism::from_strings("01", {"01", "10"}); }

void BM_EertreeThueMorse(benchmark::State& state) {
  const Word w = fixed_point_prefix(thue_morse(), 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(PalIndex::build(w).node_count());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EertreeThueMorse)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_DefectStream(benchmark::State& state) {
  const Morphism m = bucci_vaslet_morphism();
  const auto lengths = doubling_checkpoints(16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(defect_stream(m, 0, lengths));
}
BENCHMARK(BM_DefectStream)->Arg(50000)->Arg(1 << 20);

void BM_Snapshot(benchmark::State& state) {
  const Morphism m = bucci_vaslet_morphism();
  for (auto _ : state) benchmark::DoNotOptimize(LanguageSnapshot::build(m, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Snapshot)->Arg(16)->Arg(32)->Arg(64);

void BM_CycleWitness(benchmark::State& state) {
  const LanguageSnapshot lang = LanguageSnapshot::build(thue_morse(), 16);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_witness(lang));
}
BENCHMARK(BM_CycleWitness);

}  // namespace

BENCHMARK_MAIN();
