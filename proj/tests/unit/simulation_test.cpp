#include "hgrid/error.hpp"
#include "hgrid/simulation.hpp"
#include "hgrid/trace_io.hpp"

#include "test_paths.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace {

using namespace hgrid;
using hgrid::testing::data_dir;

BatteryUnit unit(double capacity, double energy)
{
    BatteryUnit u;
    u.capacity = capacity;
    u.energy = energy;
    u.r_charge = kDefaultChargeDegradation;
    u.r_discharge = kDefaultDischargeDegradation;
    return u;
}

// One solar plant (1 MWd per 10 W/m^2 of ghi) feeding `systems`, one load
// drawing from `load_systems`.
SimulationState small_grid(std::vector<int> const& systems, std::vector<int> const& load_systems, double energy)
{
    SimulationState st;
    for (int id : systems) st.topology.systems.push_back(make_system(id, 2, unit(10.0, energy)));
    EnergySource s;
    s.id = 1;
    s.site_id = "here";
    s.params = SolarPlantParams{100000.0, 1.0};
    s.connected_systems = systems;
    st.topology.sources.push_back(s);
    st.topology.loads.push_back({1, "load", load_systems});
    ForecastConfig fc;
    fc.method = ForecastMethod::seasonal_naive;
    fc.orders.s = 2;
    st.forecasters.emplace(1, LoadForecaster(fc, {0.0, 0.0}));
    return st;
}

DayInputs inputs(int day, double ghi, double demand)
{
    DayInputs in;
    in.day = day;
    in.weather["here"] = {day, "here", ghi, 0.0};
    in.demand[1] = demand;
    return in;
}

TEST(StepDay, NothingHappensWithoutGenerationOrDemand)
{
    auto st = small_grid({1, 2}, {1, 2}, 5.0);
    for (int d = 0; d < 5; ++d) {
        auto const rec = step_day(st, inputs(d, 0.0, 0.0), {});
        for (auto const& s : rec.systems) {
            EXPECT_DOUBLE_EQ(s.soc_pct, 50.0);
            EXPECT_DOUBLE_EQ(s.mean_soh_pct, 100.0);
            EXPECT_EQ(s.charge_in, 0.0);
            EXPECT_EQ(s.discharge_out, 0.0);
            EXPECT_FALSE(s.zero_soc);
        }
        EXPECT_EQ(rec.loads.at(0).unmet, 0.0);
    }
}

TEST(StepDay, ZeroDemandLeavesNothingUnmet)
{
    auto st = small_grid({1}, {1}, 0.0);
    for (int d = 0; d < 10; ++d) {
        auto const rec = step_day(st, inputs(d, 30.0, 0.0), {});
        EXPECT_EQ(rec.loads.at(0).unmet, 0.0);
        EXPECT_EQ(rec.loads.at(0).served, 0.0);
    }
    // 3 MWd a day until the 20 MWd system is full.
    EXPECT_DOUBLE_EQ(stored_energy(st.topology.systems[0]), 20.0);
}

TEST(StepDay, DrainsWithoutGenerationUntilEmpty)
{
    auto st = small_grid({1}, {1}, 10.0);  // full: 20 MWd
    double prev = 100.0;
    int empty_day = -1;
    for (int d = 0; d < 10; ++d) {
        auto const rec = step_day(st, inputs(d, 0.0, 3.0), {});
        auto const& s = rec.systems.at(0);
        auto const& l = rec.loads.at(0);
        if (empty_day < 0) {
            EXPECT_LT(s.soc_pct, prev);
            prev = s.soc_pct;
        }
        EXPECT_NEAR(l.served + l.unmet, 3.0, 1e-12);
        if (s.zero_soc && empty_day < 0) empty_day = d;
        if (empty_day >= 0) EXPECT_EQ(s.soc_pct, 0.0);
    }
    // 20 MWd lasts six full days and two thirds of the seventh.
    EXPECT_EQ(empty_day, 6);
}

TEST(StepDay, SurplusHandTrace)
{
    auto st = small_grid({1}, {1}, 5.0);
    // 8 MWd generated, forecast 0 (history of zeros), 2 MWd demand.
    auto const rec = step_day(st, inputs(0, 80.0, 2.0), {});
    auto const& s = rec.systems.at(0);
    EXPECT_DOUBLE_EQ(s.target, 0.0);
    EXPECT_DOUBLE_EQ(s.charge_in, 8.0);
    EXPECT_DOUBLE_EQ(s.discharge_out, 2.0);
    EXPECT_DOUBLE_EQ(s.soc_pct, 80.0);  // (10 + 8 - 2) / 20
    EXPECT_DOUBLE_EQ(rec.sources.at(0).generated, 8.0);
    EXPECT_DOUBLE_EQ(rec.sources.at(0).curtailed, 0.0);
    // 4 MWd into each 10 MWd unit, then 1 MWd out of each.
    double const loss = 4.0 * kDefaultChargeDegradation / 10.0 + 1.0 * kDefaultDischargeDegradation / 10.0;
    EXPECT_NEAR(s.mean_soh_pct, 100.0 - loss, 1e-12);

    // Next day the system fills and the rest is curtailed.
    auto const next = step_day(st, inputs(1, 80.0, 0.0), {});
    EXPECT_DOUBLE_EQ(next.systems.at(0).charge_in, 4.0);
    EXPECT_DOUBLE_EQ(next.sources.at(0).curtailed, 4.0);
}

TEST(StepDay, SharedLoadDrawsInProportionToStoredEnergy)
{
    auto st = small_grid({1, 2}, {1, 2}, 0.0);
    st.topology.systems[0].units[0].energy = 6.0;  // system 1 holds 6, system 2 holds 2
    st.topology.systems[1].units[1].energy = 2.0;
    auto const rec = step_day(st, inputs(0, 0.0, 4.0), {});
    EXPECT_DOUBLE_EQ(rec.systems[0].discharge_out, 3.0);
    EXPECT_DOUBLE_EQ(rec.systems[1].discharge_out, 1.0);
    EXPECT_DOUBLE_EQ(rec.loads[0].served, 4.0);
}

TEST(StepDay, MissingInputsFail)
{
    auto st = small_grid({1}, {1}, 5.0);
    auto in = inputs(0, 10.0, 1.0);
    in.demand.clear();
    EXPECT_THROW(step_day(st, in, {}), SimulationError);
    in = inputs(0, 10.0, 1.0);
    in.weather.clear();
    EXPECT_THROW(step_day(st, in, {}), ValidationError);
}

TEST(LoadForecaster, WarmsUpThenRefitsOnSchedule)
{
    ForecastConfig fc;
    fc.refit_interval_days = 30;
    LoadForecaster f(fc, {});
    EXPECT_EQ(f.forecast(), 0.0);
    f.observe(12.0);
    EXPECT_EQ(f.forecast(), 12.0);
    for (int i = 1; i < 7; ++i) f.observe(10.0 + i);
    EXPECT_EQ(f.forecast(), 12.0);  // one season back

    while (f.history().size() < f.warm_up_length()) f.observe(10.0 + f.history().size() % 7);
    EXPECT_FALSE(f.using_sarima());
    for (int i = 0; i < 61; ++i) {
        EXPECT_GE(f.forecast(), 0.0);
        f.observe(10.0 + f.history().size() % 7);
    }
    EXPECT_TRUE(f.using_sarima());
    EXPECT_EQ(f.fit_count(), 3u);  // days 0, 30 and 60 after warm-up
}

TEST(UnitVariation, SeededAndBounded)
{
    auto a = reference_topology();
    auto b = reference_topology();
    UnitVariation const v{90.0, 4.0};
    apply_unit_variation(a, v, 7);
    apply_unit_variation(b, v, 7);
    bool any_low = false;
    for (std::size_t s = 0; s < a.systems.size(); ++s) {
        for (std::size_t u = 0; u < a.systems[s].units.size(); ++u) {
            auto const& x = a.systems[s].units[u];
            EXPECT_EQ(x.soh, b.systems[s].units[u].soh);
            EXPECT_GE(x.soh, 90.0);
            EXPECT_LE(x.soh, 100.0);
            // Worse starting condition goes with faster wear.
            double const frac = (100.0 - x.soh) / 10.0;
            EXPECT_NEAR(x.r_charge, kDefaultChargeDegradation * (1.0 + 3.0 * frac), 1e-9);
            any_low |= x.soh < 95.0;
        }
    }
    EXPECT_TRUE(any_low);
}

TEST(RunSimulation, ToyMatchesGoldenTrace)
{
    auto const sc = load_scenario(data_dir() / "toy" / "toy.json");
    auto const trace = run_simulation(sc.config, sc.topology);
    std::ifstream golden(data_dir() / "toy" / "golden_trace.csv");
    std::stringstream ss;
    ss << golden.rdbuf();
    EXPECT_EQ(trace_csv(trace), ss.str());
}

TEST(RunSimulation, ConservesEnergy)
{
    auto const sc = load_scenario(data_dir() / "toy" / "toy.json");
    auto const trace = run_simulation(sc.config, sc.topology);
    double const initial = sc.topology.total_capacity() * 0.5;
    double in = 0.0, out = 0.0, generated = 0.0, curtailed = 0.0;
    for (auto const& r : trace.records) {
        for (auto const& s : r.systems) {
            in += s.charge_in;
            out += s.discharge_out;
        }
        for (auto const& s : r.sources) {
            generated += s.generated;
            curtailed += s.curtailed;
        }
    }
    double final_stored = 0.0;
    for (auto const& s : trace.records.back().systems) final_stored += s.soc_pct / 100.0 * 20.0;
    EXPECT_NEAR(initial + in - out, final_stored, 1e-9);
    EXPECT_NEAR(generated - curtailed, in, 1e-9);
    EXPECT_NEAR(trace.summary.total_served_mwd, out, 1e-9);
    EXPECT_NEAR(trace.summary.total_served_mwd + trace.summary.total_unmet_mwd, trace.summary.total_demand_mwd, 1e-9);
}

TEST(RunSimulation, DeterministicAndComparable)
{
    auto sc = load_scenario(std::filesystem::path(HGRID_CONFIG_DIR) / "reference.json");
    sc.config.days = 60;
    auto const a = run_simulation(sc.config, sc.topology);
    auto const b = run_simulation(sc.config, sc.topology);
    EXPECT_EQ(trace_csv(a), trace_csv(b));
    auto const report = compare(a, b);
    EXPECT_EQ(report.fleet_soh_gap_pp, 0.0);
    for (auto const& s : report.systems) EXPECT_EQ(s.soh_gap_pp, 0.0);

    sc.config.seed = 43;
    EXPECT_NE(trace_csv(run_simulation(sc.config, sc.topology)), trace_csv(a));

    sc.config.days = 30;
    EXPECT_THROW(compare(a, run_simulation(sc.config, sc.topology)), ValidationError);
}

TEST(RunSimulation, ExhaustedInputsFail)
{
    auto sc = load_scenario(data_dir() / "toy" / "toy.json");
    sc.config.days = 4;
    EXPECT_THROW(run_simulation(sc.config, sc.topology), SimulationError);
}

TEST(RunSimulation, InvalidTopologyIsRejected)
{
    auto sc = load_scenario(data_dir() / "toy" / "toy.json");
    sc.topology.loads[0].connected_systems.push_back(99);
    EXPECT_THROW(run_simulation(sc.config, sc.topology), ValidationError);
}

} // namespace

namespace {

using namespace hgrid;

TEST(ReferenceScenario, NoSystemEmptiesWithPriorityOn)
{
    auto sc = load_scenario(std::filesystem::path(HGRID_CONFIG_DIR) / "reference.json");
    sc.config.days = 365;
    sc.config.seed = 42;
    auto const trace = run_simulation(sc.config, sc.topology);
    EXPECT_EQ(trace.summary.zero_soc_events, 0);
}

TEST(ReferenceScenario, HealthAxisGapIsNonNegativeOnEverySystem)
{
    auto const sc = load_scenario(std::filesystem::path(HGRID_CONFIG_DIR) / "reference.json");
    auto const inputs = prepare_inputs(sc.config, sc.topology);
    auto on = sc.config;
    auto off = sc.config;
    off.health_enabled = false;
    auto const report = compare(run_simulation(off, sc.topology, inputs), run_simulation(on, sc.topology, inputs));
    for (auto const& s : report.systems) EXPECT_GE(s.soh_gap_pp, 0.0) << "system " << s.system_id;
    EXPECT_GT(report.fleet_soh_gap_pp, 0.0);
}

} // namespace
