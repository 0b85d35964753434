// Serial reference vs OpenMP kernels: q-series convolution and the (k, m) trace grids.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "hecketrace/oracle.hpp"
#include "hecketrace/qseries.hpp"
#include "hecketrace/tfengine.hpp"

using namespace hecketrace;

namespace {

std::vector<int> even_weights(int lo, int hi) {
  std::vector<int> ks;
  for (int k = lo; k <= hi; k += 2) ks.push_back(k);
  return ks;
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> ms(hi - lo + 1);
  std::iota(ms.begin(), ms.end(), lo);
  return ms;
}

}  // namespace

static void convolution_serial(benchmark::State& state) {
  const auto e4 = eisenstein(4, state.range(0));
  const auto e6 = eisenstein(6, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(e4, e6));
}

static void convolution_omp(benchmark::State& state) {
  const auto e4 = eisenstein(4, state.range(0));
  const auto e6 = eisenstein(6, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_parallel(e4, e6));
}

static void trace_grid_serial_bench(benchmark::State& state) {
  const auto ks = even_weights(4, 30);
  const auto ms = range(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_grid_serial(ks, ms));
}

static void trace_grid_omp(benchmark::State& state) {
  const auto ks = even_weights(4, 30);
  const auto ms = range(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_grid(ks, ms));
}

static void oracle_grid_serial(benchmark::State& state) {
  const auto ks = even_weights(4, 30);
  const auto ms = range(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_trace_grid_serial(ks, ms));
}

static void oracle_grid_omp(benchmark::State& state) {
  const auto ks = even_weights(4, 30);
  const auto ms = range(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_trace_grid(ks, ms));
}

BENCHMARK(convolution_serial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(convolution_omp)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(trace_grid_serial_bench)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(trace_grid_omp)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(oracle_grid_serial)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(oracle_grid_omp)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
