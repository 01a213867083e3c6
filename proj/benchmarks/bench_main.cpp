#include <benchmark/benchmark.h>

#include <vector>

#include "bcsee/amplitudes.hpp"
#include "bcsee/dos.hpp"
#include "bcsee/io.hpp"
#include "bcsee/observables.hpp"
#include "bcsee/oracle.hpp"

namespace {

void BM_EntropyIntegral(benchmark::State& state) {
  const double debye = static_cast<double>(state.range(0));
  const auto dos = bcsee::DosModel::constant(1.0);
  const bcsee::ModelParams p{1.0, debye, 1e3 * debye};
  for (auto _ : state) benchmark::DoNotOptimize(bcsee::entropy_integral(dos, p).value);
}
BENCHMARK(BM_EntropyIntegral)->Arg(10)->Arg(1000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_VarianceIntegral(benchmark::State& state) {
  const auto dos = bcsee::DosModel::constant(1.0);
  const bcsee::ModelParams p{1.0, 1e4, 1e7};
  for (auto _ : state) benchmark::DoNotOptimize(bcsee::variance_integral(dos, p).variance_up);
}
BENCHMARK(BM_VarianceIntegral)->Unit(benchmark::kMicrosecond);

void BM_SpectrumGrid(benchmark::State& state) {
  bcsee::GridSpec g{-1e4, 1e4, static_cast<std::size_t>(state.range(0)),
                    bcsee::GridSpacing::log_symmetric, 1e-6};
  const auto grid = bcsee::make_grid(g);
  const bcsee::ModelParams p{1.0, 1e4, 1e6};
  for (auto _ : state) benchmark::DoNotOptimize(bcsee::spectrum_grid(grid, p).data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpectrumGrid)->Arg(1000)->Arg(100000);

void BM_OracleBuildAndTrace(benchmark::State& state) {
  std::vector<double> xis;
  for (int k = 0; k < state.range(0); ++k) xis.push_back(-4.0 + 1.1 * k);
  const bcsee::ModelParams p{1.0, 10.0, 100.0};
  for (auto _ : state) {
    const auto s = bcsee::build_state(xis, p);
    benchmark::DoNotOptimize(bcsee::oracle_entropy(s));
  }
}
BENCHMARK(BM_OracleBuildAndTrace)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
