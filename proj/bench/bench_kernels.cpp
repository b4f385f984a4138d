#include <benchmark/benchmark.h>
#include <omp.h>

#include "hfp/engine.hpp"
#include "hfp/integrands.hpp"
#include "hfp/interpolation.hpp"

namespace {

void BM_CoefficientTableSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hfp::NodeLayout layout = hfp::layout_nodes(1e-5, hfp::Interval{}, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfp::coefficient_table_serial(layout, 1));
  }
  state.SetComplexityN(n);
}

void BM_CoefficientTableParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hfp::NodeLayout layout = hfp::layout_nodes(1e-5, hfp::Interval{}, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfp::coefficient_table(layout, 1));
  }
  state.SetComplexityN(n);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SearchOptimalN(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const hfp::BuiltinIntegrand f = hfp::make_builtin("inv-sqrt-pole", {{"c", 1.21}});
  const hfp::WeightFamily w = hfp::WeightFamily::legendre();
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hfp::search_optimal_n(f.integrand, w, 1e-5, 1, 33, 23, 43, hfp::SearchCriterion::Stabilization));
  }
  omp_set_num_threads(saved);
}

}  // namespace

BENCHMARK(BM_CoefficientTableSerial)->RangeMultiplier(2)->Range(25, 200)->Complexity();
BENCHMARK(BM_CoefficientTableParallel)->RangeMultiplier(2)->Range(25, 200)->Complexity();
BENCHMARK(BM_SearchOptimalN)->Arg(1)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
