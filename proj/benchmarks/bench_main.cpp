#include <benchmark/benchmark.h>

#include "alphapart/asym.hpp"
#include "alphapart/exact.hpp"
#include "alphapart/params.hpp"
#include "alphapart/saddle.hpp"
#include "alphapart/special.hpp"

namespace {

using namespace alphapart;

void BM_g_prefix_rational(benchmark::State& state) {
  auto params = AlphaParams::from_rational(1, 2);
  const auto k_max = state.range(0);
  for (auto _ : state) {
    auto v = g_prefix(params, k_max);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * k_max);
}
BENCHMARK(BM_g_prefix_rational)->Arg(1000)->Arg(100000);

void BM_g_prefix_guarded(benchmark::State& state) {
  auto params = AlphaParams::from_real(0.7);
  const auto k_max = state.range(0);
  for (auto _ : state) {
    auto v = g_prefix(params, k_max);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * k_max);
}
BENCHMARK(BM_g_prefix_guarded)->Arg(1000)->Arg(10000);

void BM_solve_saddle(benchmark::State& state) {
  auto params = AlphaParams::from_rational(1, 2);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto sol = saddle::solve_saddle(params, n, 1.0);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_solve_saddle)->Arg(1000)->Arg(100000);

void BM_eta_value(benchmark::State& state) {
  double s = 0.5;
  for (auto _ : state) {
    auto v = special::eta_value(s);
    benchmark::DoNotOptimize(v);
    s = s < 4.0 ? s + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_eta_value);

void BM_polylog_fermi_dirac(benchmark::State& state) {
  double u = 1.5;
  for (auto _ : state) {
    auto v = special::polylog_neg(2.5, u);
    benchmark::DoNotOptimize(v);
    u = u < 4.0 ? u + 1e-3 : 1.5;
  }
}
BENCHMARK(BM_polylog_fermi_dirac);

void BM_count_table(benchmark::State& state) {
  auto params = AlphaParams::from_rational(1, 2);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto t = exact::build_count_table(params, n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_count_table)->Unit(benchmark::kMillisecond)->Arg(100)->Arg(500);

void BM_moment_series(benchmark::State& state) {
  auto params = AlphaParams::from_rational(1, 2);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto m = exact::moment_series(params, n);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_moment_series)->Unit(benchmark::kMillisecond)->Arg(500)->Arg(2000);

void BM_q_ratio_on_circle(benchmark::State& state) {
  auto params = AlphaParams::from_rational(1, 2);
  auto sol = saddle::solve_saddle(params, 2000, 1.0);
  double y = sol.t_n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(saddle::q_ratio_on_circle(params, sol, y));
    y = y < 3.0 ? y + 1e-3 : sol.t_n;
  }
}
BENCHMARK(BM_q_ratio_on_circle);

} // namespace

BENCHMARK_MAIN();
