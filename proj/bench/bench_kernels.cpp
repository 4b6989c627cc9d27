#include <benchmark/benchmark.h>

#include "v1ss/cobar.hpp"
#include "v1ss/specseq.hpp"
#include "v1ss/verify.hpp"

using namespace v1ss;

namespace {

const PageSet& pages() {
  static const PageSet p(TruncationWindow::standard(64, 12, -16, 16));
  return p;
}

void BM_HomologySerial(benchmark::State& state) {
  const auto& c = pages().e3_m_complex();
  for (auto _ : state) benchmark::DoNotOptimize(homology_page_serial(c));
}

void BM_HomologyParallel(benchmark::State& state) {
  const auto& c = pages().e3_m_complex();
  ExecPolicy policy{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(homology_page(c, policy));
}

void BM_ExtSerial(benchmark::State& state) {
  auto com = Comodule::endomorphisms();
  for (auto _ : state) benchmark::DoNotOptimize(ext_dimensions_serial(com, 8, {-1, 16}));
}

void BM_ExtParallel(benchmark::State& state) {
  auto com = Comodule::endomorphisms();
  ExecPolicy policy{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ext_dimensions(com, 8, {-1, 16}, policy));
}

void BM_Claims(benchmark::State& state) {
  ExecPolicy policy{static_cast<int>(state.range(0))};
  auto table = claims_mahowald_table(pages(), policy);
  for (auto _ : state) benchmark::DoNotOptimize(verify_e4_claims(pages(), table, policy));
}

}  // namespace

BENCHMARK(BM_HomologySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Claims)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
