#include <benchmark/benchmark.h>

#include "higgs/groebner.hpp"
#include "higgs/poincare.hpp"
#include "higgs/rings.hpp"
#include "higgs/series.hpp"
#include "higgs/symprod.hpp"

using namespace higgs;

static void BM_BuchbergerR(benchmark::State& state) {
  const PresentedRing pr = buildR(static_cast<int>(state.range(0)));
  const IdealPresentation ideal(pr.ring, pr.relations);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
  state.counters["relations"] = static_cast<double>(pr.relations.size());
}
BENCHMARK(BM_BuchbergerR)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_BuchbergerIg(benchmark::State& state) {
  const PresentedRing pr = buildIg(static_cast<int>(state.range(0)));
  const IdealPresentation ideal(pr.ring, pr.relations);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_BuchbergerIg)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_PoincareM(benchmark::State& state) {
  GenusParams p;
  p.g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare(SpaceId::M, p));
}
BENCHMARK(BM_PoincareM)->Arg(2)->Arg(5)->Arg(10);

static void BM_PoincareZ(benchmark::State& state) {
  GenusParams p;
  p.g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare(SpaceId::Z, p));
}
BENCHMARK(BM_PoincareZ)->Arg(2)->Arg(5)->Arg(10);

static void BM_SeriesExp(benchmark::State& state) {
  const RingPtr ring = makeRing({{"x", 1}, {"y", 1}, {"z", 1}});
  const MultiPoly f = parsePoly(ring, "x + 1/2*y^2 + -3*x*z + z^3");
  const TruncatedSeries s(f, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(seriesExp(s));
}
BENCHMARK(BM_SeriesExp)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_GeneratingFunction(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zagierGeneratingFunction(static_cast<int>(state.range(0)), GfParse::ExpGammaOverBeta));
}
BENCHMARK(BM_GeneratingFunction)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VanishingGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vanishingLemmaGrid(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VanishingGrid)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
