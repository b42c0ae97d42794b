// Serial vs OpenMP scans for collapsible faces, on connectors and reduction complexes.
#include <benchmark/benchmark.h>

#include "dcollapse/gadgets.hpp"
#include "dcollapse/kernels.hpp"
#include "dcollapse/reduction.hpp"
#include "dcollapse/sat.hpp"

using namespace dcollapse;

namespace {

const Complex& sample(int which) {
  static const Complex connector = connector_blueprint(4, 6).complex;
  static const Complex reduction =
      build_reduction(parse_dimacs_text("p cnf 4 4\n1 2 3 0\n-1 -2 4 0\n-1 -3 -4 0\n2 -3 4 0\n"), 4).complex;
  return which == 0 ? connector : reduction;
}

void BM_ScanSerial(benchmark::State& state) {
  Workspace ws(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::collapsible_ids_serial(ws, 4));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ws.face_count()));
}

void BM_ScanParallel(benchmark::State& state) {
  Workspace ws(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::collapsible_ids_parallel(ws, 4));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ws.face_count()));
}

void BM_WorkspaceBuild(benchmark::State& state) {
  const Complex& K = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Workspace(K));
}

}  // namespace

// Argument 0: connector (4,6); 1: reduction complex of a four-clause formula.
BENCHMARK(BM_ScanSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WorkspaceBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
