#include <mopoly/construct.hpp>
#include <mopoly/verify.hpp>
#include <mopoly/quadrature.hpp>

#include <benchmark/benchmark.h>

using namespace mopoly;

static void BM_OracleExtended(benchmark::State& state) {
    const auto [token, spec] = canonical_specs()[static_cast<std::size_t>(state.range(0))];
    const auto idx = MultiIndex::stepline(2, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_polynomial<Extended>(spec, idx));
    state.SetLabel(token);
}
BENCHMARK(BM_OracleExtended)->ArgsProduct({benchmark::CreateDenseRange(0, 6, 1), {12}})->Unit(benchmark::kMillisecond);

static void BM_OracleFromTable(benchmark::State& state) {
    const auto spec = canonical_specs()[3].second;
    const int N = static_cast<int>(state.range(0));
    const auto table = MomentTable<Extended>::build(spec, 2 * N);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_polynomial<Extended>(table, MultiIndex::stepline(2, N)));
}
BENCHMARK(BM_OracleFromTable)->DenseRange(4, 16, 4);

static void BM_OracleRational(benchmark::State& state) {
    const auto spec = canonical_specs()[0].second;
    const auto idx = MultiIndex::stepline(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_polynomial<Rational>(spec, idx));
}
BENCHMARK(BM_OracleRational)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
