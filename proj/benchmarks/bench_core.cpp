#include <benchmark/benchmark.h>

#include "ucost/calibration.hpp"
#include "ucost/cost.hpp"
#include "ucost/solver.hpp"

namespace {

ucost::ModelParameters baseline() {
    return {1.102, 0.88, 0.4, 0.5, 0.1, ucost::EconomyKind::frail, 0.045, 0.01, 0.25};
}

void BM_SolveSteadyState(benchmark::State& state) {
    const auto p = baseline();
    for (auto _ : state) {
        auto s = ucost::solve_steady_state(p);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SolveSteadyState);

void BM_BisectFixedPoint(benchmark::State& state) {
    const auto p = baseline();
    for (auto _ : state) {
        double k = ucost::bisect_fixed_point(p, 1.0, 20.0, 1e-12);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_BisectFixedPoint);

void BM_UncertaintyCost(benchmark::State& state) {
    auto high_params = baseline();
    high_params.eta = 0.142;
    const auto low = ucost::solve_steady_state(baseline());
    const auto high = ucost::solve_steady_state(high_params);
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report = ucost::uncertainty_cost(low, high, horizon, 0.0);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_UncertaintyCost)->Arg(15)->Arg(60);

void BM_EstimateLambda(benchmark::State& state) {
    const ucost::ParetoSpec spec{2.0, 1.0, 1.0660035817780522};
    const auto replications = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto estimate = ucost::estimate_lambda(spec, replications, 42);
        benchmark::DoNotOptimize(estimate);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            state.range(0));
}
BENCHMARK(BM_EstimateLambda)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
