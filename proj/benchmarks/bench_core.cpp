#include <benchmark/benchmark.h>

#include <complex>

#include "isq/measure.hpp"
#include "isq/solutions.hpp"
#include "isq/special.hpp"
#include "isq/transform.hpp"

using namespace isq;

static void BM_chi_series(benchmark::State& state) {
    const cplx zeta(static_cast<double>(state.range(0)), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(chi(0.3, zeta));
}
BENCHMARK(BM_chi_series)->Arg(1)->Arg(50)->Arg(200);

static void BM_chi_asymptotic(benchmark::State& state) {
    const cplx zeta(400.0, 30.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(chi(0.3, zeta));
}
BENCHMARK(BM_chi_asymptotic);

static void BM_eval_u_theta(benchmark::State& state) {
    const ExtensionParams p(0.3, 1.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_u_theta(p, cplx(2.0, 0.0), 1.3));
}
BENCHMARK(BM_eval_u_theta);

static void BM_eval_u_theta_blend_band(benchmark::State& state) {
    const ExtensionParams p(5e-3, 1.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_u_theta(p, cplx(2.0, 0.0), 1.3));
}
BENCHMARK(BM_eval_u_theta_blend_band);

static void BM_hankel1_cf2(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(hankel1(0.4, cplx(3.0, 4.0)));
}
BENCHMARK(BM_hankel1_cf2);

static void BM_m_function(benchmark::State& state) {
    const ExtensionParams p(0.3, 1.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(m_function(p, cplx(2.0, 1e-3)));
}
BENCHMARK(BM_m_function);

static void BM_density(benchmark::State& state) {
    const ExtensionParams p(0.3, 1.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(density(p, 2.0));
}
BENCHMARK(BM_density);

static void BM_forward_transform(benchmark::State& state) {
    const ExtensionParams p(0.3, 1.1);
    const double e_max = static_cast<double>(state.range(0));
    const auto g = sample_grid(make_bump(1.0, 2.0), e_max);
    const auto eg = make_energy_grid(e_max, g.b);
    for (auto _ : state)
        benchmark::DoNotOptimize(forward(p, g, eg));
}
BENCHMARK(BM_forward_transform)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
