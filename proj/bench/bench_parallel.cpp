// Serial reference kernels against their OpenMP versions.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "gpscale/experiments.hpp"
#include "gpscale/kernels.hpp"
#include "gpscale/parallel.hpp"
#include "gpscale/pointsets.hpp"
#include "gpscale/reference.hpp"

using namespace gpscale;

namespace {

const Kernel& matern_kernel() {
  static const Kernel k(KernelSpec::matern(1.25, 0.3, 2));
  return k;
}

template <bool Parallel>
void BM_gram_matrix(benchmark::State& state) {
  const PointSet x = make_design(Design::cartesian_grid, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(parallel::gram_matrix(matern_kernel(), x));
    } else {
      benchmark::DoNotOptimize(reference::gram_matrix(matern_kernel(), x));
    }
  }
  state.counters["N"] = static_cast<double>(x.size());
}

template <bool Parallel>
void BM_lattice_fill_distance(benchmark::State& state) {
  const PointSet x = make_design(Design::cartesian_vdc, 12, 2);
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(parallel::lattice_fill_distance(x, resolution));
    } else {
      benchmark::DoNotOptimize(reference::lattice_fill_distance(x, resolution));
    }
  }
}

template <bool Parallel>
void BM_map_points(benchmark::State& state) {
  const FunctionExpansion f{0.75, 0.8, {1.0, 0.5, 0.2}, {0.1, 0.1, 0.5, 0.1, 0.725, 0.565}, 2};
  const std::vector<double> q = make_lattice(static_cast<int>(state.range(0)), 2, true);
  const auto fn = [&f](ConstPoint p) { return eval_expansion(f, p); };
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(parallel::map_points(fn, q, 2));
    } else {
      benchmark::DoNotOptimize(reference::map_points(fn, q, 2));
    }
  }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_gram_matrix, false)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_gram_matrix, true)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_lattice_fill_distance, false)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_lattice_fill_distance, true)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_map_points, false)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_map_points, true)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
