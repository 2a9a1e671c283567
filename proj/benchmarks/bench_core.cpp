// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>

#include "opiallab/emdenfowler.hpp"
#include "opiallab/funcspace.hpp"
#include "opiallab/inequalities.hpp"
#include "opiallab/quadrature.hpp"
#include "opiallab/specfun.hpp"
#include "opiallab/variational.hpp"

namespace {

using namespace opiallab;

void BM_Beta(benchmark::State& state) {
  double a = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::beta(a, 0.5));
    a += 1e-9;
  }
}
BENCHMARK(BM_Beta);

void BM_I0ByQuadrature(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::i0_by_quadrature(p).value);
}
BENCHMARK(BM_I0ByQuadrature)->Arg(1)->Arg(3)->Arg(10);

void BM_IntegrateSmooth(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        quadrature::integrate_smooth([](double t) { return std::exp(-t) * std::sin(7 * t); }, 0, 3,
                                     1e-12)
            .value);
  }
}
BENCHMARK(BM_IntegrateSmooth);

void BM_ChainCheck(benchmark::State& state) {
  const auto u = funcspace::sample_random(8, 1.0, 17, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(inequalities::chain_check(u));
}
BENCHMARK(BM_ChainCheck);

void BM_Shoot(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(emdenfowler::shoot(3.0, 1.0, 1.0, 1e-10, steps));
}
BENCHMARK(BM_Shoot)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_FirstIntegral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(emdenfowler::profile_from_first_integral(3.0, 1.0, 3.7, n));
  }
}
BENCHMARK(BM_FirstIntegral)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Maximize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(variational::maximize(3.0, 1.0, {.n = n}));
}
BENCHMARK(BM_Maximize)->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
