// OpenMP checkers against the serial brute-force reference.

#include "h3l/algebra.hpp"
#include "h3l/corpus.hpp"
#include "h3l/rinehart.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>

using namespace h3l;

namespace {

// tprime-core: window 1 gives dim 6, 2 gives 10, 3 gives 14.
const RinehartBundle& core(int window) {
  static std::map<int, RinehartBundle> cache;
  auto it = cache.find(window);
  if (it == cache.end()) it = cache.emplace(window, generate_corpus({"tprime-core", -1, window})).first;
  return it->second;
}

void BM_hom_jacobi_parallel(benchmark::State& state) {
  const Hom3Lie& L = core(static_cast<int>(state.range(0))).L;
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(check_hom_jacobi(L));
  state.counters["dim"] = static_cast<double>(L.dim());
}

void BM_hom_jacobi_serial_reference(benchmark::State& state) {
  const Hom3Lie& L = core(static_cast<int>(state.range(0))).L;
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_hom_jacobi(L));
  state.counters["dim"] = static_cast<double>(L.dim());
}

void BM_full_rinehart(benchmark::State& state) {
  const RinehartBundle B = generate_corpus({"jacobian-weak", static_cast<int>(state.range(0))});
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(check_full_rinehart(B));
  state.counters["dim"] = static_cast<double>(B.L.dim());
}

}  // namespace

BENCHMARK(BM_hom_jacobi_parallel)->ArgsProduct({{1, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hom_jacobi_serial_reference)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_full_rinehart)->ArgsProduct({{2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
