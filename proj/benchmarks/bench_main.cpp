#include "hgrid/dispatch.hpp"
#include "hgrid/sarima.hpp"
#include "hgrid/scenario.hpp"
#include "hgrid/simulation.hpp"
#include "hgrid/synthetic.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

namespace {

using namespace hgrid;

// Dense 4 x 7 network shaped like the reference grid, random energies.
void BM_AllocatePriority(benchmark::State& state)
{
    ChargeNetwork n;
    n.source_ids = {1, 2, 3, 4};
    n.system_ids = {1, 2, 3, 4, 5, 6, 7};
    n.source_systems = {{0, 1, 2, 3}, {0, 1, 2, 3}, {3, 4, 5, 6}, {3, 4, 5, 6}};
    Rng rng(1);
    n.source_energy.resize(4);
    n.headroom.resize(7);
    std::vector<double> deficits(7);
    std::vector<std::size_t> order(7);
    for (auto _ : state) {
        state.PauseTiming();
        for (auto& e : n.source_energy) e = 400.0 * rng.uniform();
        for (std::size_t j = 0; j < 7; ++j) {
            n.headroom[j] = 1000.0 * rng.uniform();
            deficits[j] = n.headroom[j] * rng.uniform();
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return deficits[a] > deficits[b]; });
        state.ResumeTiming();
        benchmark::DoNotOptimize(allocate_priority(n, order, deficits));
    }
}
BENCHMARK(BM_AllocatePriority);

void BM_FitSarima(benchmark::State& state)
{
    auto const y = synth_seasonal_ar(3, static_cast<std::size_t>(state.range(0)), 100.0, 0.6, 0.4, 7, 4.0);
    SarimaOrders const orders{1, 0, 0, 1, 0, 0, 7};
    for (auto _ : state) benchmark::DoNotOptimize(fit_sarima(y, orders));
}
BENCHMARK(BM_FitSarima)->Arg(90)->Arg(365)->Unit(benchmark::kMillisecond);

void BM_ReferenceRun(benchmark::State& state)
{
    auto const sc = reference_scenario();
    auto cfg = sc.config;
    cfg.days = static_cast<int>(state.range(0));
    auto const inputs = prepare_inputs(cfg, sc.topology);
    for (auto _ : state) benchmark::DoNotOptimize(run_simulation(cfg, sc.topology, inputs));
}
BENCHMARK(BM_ReferenceRun)->Arg(730)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
