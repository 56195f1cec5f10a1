#include <benchmark/benchmark.h>

#include "binmom/combinatorics.hpp"
#include "binmom/lambert.hpp"
#include "binmom/moments.hpp"
#include "binmom/saddle.hpp"

namespace {

void BM_StirlingRow(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmom::stirling_row(k));
  }
}
BENCHMARK(BM_StirlingRow)->Arg(50)->Arg(200)->Arg(400)->Arg(1000);

void BM_RawMomentStirling(benchmark::State& state) {
  const long k = state.range(0);
  const binmom::MomentQuery q{k, binmom::Rational(1, 2), k};
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmom::raw_moment_stirling(q));
  }
}
BENCHMARK(BM_RawMomentStirling)->Arg(50)->Arg(200)->Arg(400);

void BM_RawMomentDirect(benchmark::State& state) {
  const long n = state.range(0);
  const binmom::MomentQuery q{n, binmom::Rational(1, 2), n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmom::raw_moment_direct(q));
  }
}
BENCHMARK(BM_RawMomentDirect)->Arg(20)->Arg(50)->Arg(100);

void BM_LambertW0(benchmark::State& state) {
  double x = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmom::lambert_w0(x));
    x = x < 700.0 ? x * 1.7 : 0.001;
  }
}
BENCHMARK(BM_LambertW0);

void BM_SolveAsymptote(benchmark::State& state) {
  const binmom::AsymptoteInputs in{1.0, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmom::solve_asymptote(in));
  }
}
BENCHMARK(BM_SolveAsymptote);

}  // namespace

BENCHMARK_MAIN();
