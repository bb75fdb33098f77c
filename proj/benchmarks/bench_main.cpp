#include <benchmark/benchmark.h>

#include "z2q/bounds.hpp"
#include "z2q/fusion.hpp"
#include "z2q/nsd.hpp"
#include "z2q/sd.hpp"

using namespace z2q;

static void BM_CycloMul(benchmark::State& state) {
  CycloElem a = cyc::golden() + cyc::i(), b = cyc::nu() * cyc::sqrt3() + cyc::omega();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

static void BM_CycloInverse(benchmark::State& state) {
  CycloElem a = cyc::golden() + cyc::nu() * cyc::sqrt3();
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycloInverse);

static void BM_Codegrees(benchmark::State& state) {
  FusionRing r = build_ring(true, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(formal_codegrees(r));
}
BENCHMARK(BM_Codegrees);

static void BM_ScanBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_bound(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScanBound)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_ClassifySd(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sd_classify(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassifySd)->Arg(-1)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ClassifyNsdM1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsd_classify_m1());
}
BENCHMARK(BM_ClassifyNsdM1)->Unit(benchmark::kMillisecond);

static void BM_ClassifyNsdM2(benchmark::State& state) {
  NsdCase c = state.range(0) ? NsdCase::kEqualChi : NsdCase::kOppositeChi;
  for (auto _ : state) benchmark::DoNotOptimize(nsd_classify_m2(c));
}
BENCHMARK(BM_ClassifyNsdM2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
