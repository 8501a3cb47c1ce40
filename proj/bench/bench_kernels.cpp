// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the pool.

#include <benchmark/benchmark.h>

#include "posalg/random_check.hpp"
#include "posalg/supercone.hpp"

using namespace posalg;

namespace {

Mat decreasing_diagonal(std::size_t n) {
  std::vector<Rat> d;
  for (std::size_t i = 0; i < n; ++i) d.emplace_back(static_cast<long>(n - i));
  return Mat::diagonal(d);
}

template <Exec exec>
void BM_ConeSpanOnes(benchmark::State& state) {
  const ConeSpec spec = supercomm_spec(Mat::ones(static_cast<std::size_t>(state.range(0))), Side::left);
  for (auto _ : state) benchmark::DoNotOptimize(cone_span(spec, exec).dim);
}

template <Exec exec>
void BM_ConeSpanDiagonal(benchmark::State& state) {
  const ConeSpec spec = supercomm_spec(decreasing_diagonal(static_cast<std::size_t>(state.range(0))), Side::left);
  for (auto _ : state) benchmark::DoNotOptimize(cone_span(spec, exec).dim);
}

template <Exec exec>
void BM_RandomCheck(benchmark::State& state) {
  CheckConfig cfg;
  cfg.theorem = static_cast<Theorem>(state.range(0));
  cfg.trials = 40;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(random_check(cfg, exec).pass);
  state.SetLabel(to_string(cfg.theorem));
}

}  // namespace

BENCHMARK(BM_ConeSpanOnes<Exec::serial>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConeSpanOnes<Exec::parallel>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConeSpanDiagonal<Exec::serial>)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConeSpanDiagonal<Exec::parallel>)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomCheck<Exec::serial>)
    ->Arg(static_cast<int>(Theorem::thm_one))
    ->Arg(static_cast<int>(Theorem::thm_finitely))
    ->Arg(static_cast<int>(Theorem::thm_main))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomCheck<Exec::parallel>)
    ->Arg(static_cast<int>(Theorem::thm_one))
    ->Arg(static_cast<int>(Theorem::thm_finitely))
    ->Arg(static_cast<int>(Theorem::thm_main))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
