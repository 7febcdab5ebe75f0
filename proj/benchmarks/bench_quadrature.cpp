#include <mopoly/construct.hpp>
#include <mopoly/verify.hpp>
#include <mopoly/quadrature.hpp>

#include <benchmark/benchmark.h>

using namespace mopoly;

static void BM_GaussJacobi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi_rule<double>(0.0, 1.0, 0.3, 0.6, n));
}
BENCHMARK(BM_GaussJacobi)->RangeMultiplier(2)->Range(8, 128);

static void BM_CompositeRule(benchmark::State& state) {
    const auto w = family_weights(canonical_specs()[5].second)[1];
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(composite_rule<Extended>(w, degree));
}
BENCHMARK(BM_CompositeRule)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

static void BM_SimultaneousRule(benchmark::State& state) {
    const auto [token, spec] = canonical_specs()[static_cast<std::size_t>(state.range(0))];
    const auto idx = MultiIndex::stepline(2, 10);
    for (auto _ : state) benchmark::DoNotOptimize(simultaneous_rule<double>(spec, idx));
    state.SetLabel(token);
}
BENCHMARK(BM_SimultaneousRule)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
