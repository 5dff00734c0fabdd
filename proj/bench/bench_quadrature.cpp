#include <benchmark/benchmark.h>

#include "curvint/catalog.hpp"
#include "curvint/invariants.hpp"
#include "curvint/quadrature.hpp"

using namespace curvint;

namespace {

struct Workload {
  ChartedHypersurface surface = make_surface("ellipsoid3");
  TangentField field = make_field("hopf", "ellipsoid3", surface);
  QuadratureGrid grid;
  PointIntegrand integrand;

  explicit Workload(int count) : grid(surface, {count, count, count}) {
    integrand = [this](int chart, const Vec& u, std::span<double> out) {
      const EtaVector e = eta_all(column_system(shape_data(surface, field, chart, u)));
      for (int k = 0; k <= e.n(); ++k) out[static_cast<size_t>(k)] = e[k];
    };
  }
};

void BM_SerialKernel(benchmark::State& state) {
  const Workload w(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::weighted_sum_serial(w.surface, w.integrand, 3, w.grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.grid.size()));
}

void BM_ParallelKernel(benchmark::State& state) {
  const Workload w(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::weighted_sum_parallel(w.surface, w.integrand, 3, w.grid, workers));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.grid.size()));
}

}  // namespace

BENCHMARK(BM_SerialKernel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelKernel)
    ->ArgsProduct({{16, 32}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
