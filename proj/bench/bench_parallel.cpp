// Serial reference path versus the OpenMP path on the three parallel kernels.

#include <benchmark/benchmark.h>

#include "robinbox/figures.hpp"
#include "robinbox/oracle.hpp"
#include "robinbox/shapes.hpp"

using namespace robinbox;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel/" + std::to_string(max_threads()));
}

void BM_OracleEigs(benchmark::State& state) {
  const IntervalGeometry g{2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::oracle_eigs(g, -5.0, 10, 0, exec_of(state)));
  }
  label(state);
}

void BM_ScanFamily(benchmark::State& state) {
  const shapes::RectangleFamily fam{shapes::FamilyKind::fixed_volume, 3, 1.0};
  shapes::ScanOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapes::scan_family(fam, -2.0, shapes::Objective::ratio, 1024, opts));
  }
  label(state);
}

void BM_FigureTable(benchmark::State& state) {
  const auto id = figures::FigureId::interval_first_six;
  for (auto _ : state) {
    benchmark::DoNotOptimize(figures::figure_table(id, figures::default_range(id), exec_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_OracleEigs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanFamily)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FigureTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
