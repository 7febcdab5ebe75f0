#include <mopoly/construct.hpp>
#include <mopoly/verify.hpp>
#include <mopoly/recurrence.hpp>
#include <mopoly/spectra.hpp>

#include <benchmark/benchmark.h>

using namespace mopoly;

static void BM_Zeros(benchmark::State& state) {
    const auto [token, spec] = canonical_specs()[static_cast<std::size_t>(state.range(0))];
    const int N = static_cast<int>(state.range(1));
    bool bracketed = false;
    for (auto _ : state) {
        const auto r = zeros(spec, N);
        bracketed = r.bracketed;
        benchmark::DoNotOptimize(r.zeros.data());
    }
    state.SetLabel(token + (bracketed ? " bracketed" : ""));
}
// jl is left out at 100: its extended recurrence runs out of digits there.
BENCHMARK(BM_Zeros)->ArgsProduct({benchmark::CreateDenseRange(0, 6, 1), {10, 40}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Zeros)->ArgsProduct({{0, 1, 2, 3, 6}, {100}})->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_Hessenberg(benchmark::State& state) {
    const auto spec = canonical_specs()[0].second;
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto m = hessenberg(spec, N).dense();
        balance(m, N);
        benchmark::DoNotOptimize(m.data());
    }
}
BENCHMARK(BM_Hessenberg)->RangeMultiplier(4)->Range(16, 256);

BENCHMARK_MAIN();
