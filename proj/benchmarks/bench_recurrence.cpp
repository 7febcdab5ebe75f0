#include <mopoly/construct.hpp>
#include <mopoly/verify.hpp>
#include <mopoly/recurrence.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace mopoly;

namespace {

FamilySpec canonical(int i) { return canonical_specs()[static_cast<std::size_t>(i)].second; }

void set_label(benchmark::State& state) { state.SetLabel(canonical_specs()[static_cast<std::size_t>(state.range(0))].first); }

}  // namespace

static void BM_SteplineRecurrenceDouble(benchmark::State& state) {
    const auto spec = canonical(static_cast<int>(state.range(0)));
    const int N = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(stepline_recurrence<double>(spec, N));
    set_label(state);
}
BENCHMARK(BM_SteplineRecurrenceDouble)->ArgsProduct({benchmark::CreateDenseRange(0, 6, 1), {100}});

static void BM_SteplineRecurrenceExtended(benchmark::State& state) {
    const auto spec = canonical(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(stepline_recurrence<Extended>(spec, 40));
    set_label(state);
}
// ja and jl pay for the X_n quadrature at every n.
BENCHMARK(BM_SteplineRecurrenceExtended)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

static void BM_PolynomialViaRecurrence(benchmark::State& state) {
    const auto spec = canonical(0);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(polynomial_via_recurrence<Extended>(spec, N));
}
BENCHMARK(BM_PolynomialViaRecurrence)->RangeMultiplier(2)->Range(4, 64);

static void BM_EvaluateStepline(benchmark::State& state) {
    const auto rec = stepline_recurrence<Extended>(canonical(0), 100);
    Extended x(0.3);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_stepline(rec, 100, x));
}
BENCHMARK(BM_EvaluateStepline);

BENCHMARK_MAIN();
