#pragma once

#include "hgrid/demand.hpp"
#include "hgrid/health.hpp"
#include "hgrid/model.hpp"
#include "hgrid/sarima.hpp"
#include "hgrid/scenario.hpp"
#include "hgrid/weather.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hgrid {

/// A system counts as empty when its stored energy is at most this
/// fraction of its capacity.
inline constexpr double kZeroSocTolerance = 1e-9;

/// One-step-ahead demand forecaster for a single load. Uses the seasonal
/// naive rule until enough history exists, then a SARIMA model refitted
/// every `refit_interval_days` on the trailing training window and rolled
/// forward with each observation in between.
class LoadForecaster {
public:
    LoadForecaster(ForecastConfig config, std::vector<double> history);

    /// Forecast for the day after the last observation, >= 0.
    double forecast();
    void observe(double actual);

    /// History length at which the SARIMA model takes over.
    std::size_t warm_up_length() const noexcept;
    bool using_sarima() const noexcept { return model_.has_value(); }
    std::size_t fit_count() const noexcept { return fits_; }
    std::vector<double> const& history() const noexcept { return history_; }

private:
    ForecastConfig config_;
    std::vector<double> history_;
    std::optional<SarimaModel> model_;
    int since_fit_ = 0;
    std::size_t fits_ = 0;
};

struct SystemDay {
    int system_id = 0;
    double soc_pct = 0.0;       // end of day
    double mean_soh_pct = 0.0;  // end of day
    double target = 0.0;
    double deficit = 0.0;
    double charge_in = 0.0;
    double discharge_out = 0.0;
    bool zero_soc = false;
};

struct LoadDay {
    int load_id = 0;
    double forecast = 0.0;
    double demand = 0.0;
    double served = 0.0;
    double unmet = 0.0;
};

struct SourceDay {
    int source_id = 0;
    double generated = 0.0;
    double curtailed = 0.0;
};

struct DailyRecord {
    int day = 0;
    std::vector<SystemDay> systems;  // ascending system id
    std::vector<LoadDay> loads;      // ascending load id
    std::vector<SourceDay> sources;  // ascending source id
};

struct StepOptions {
    bool priority_enabled = true;
    bool health_enabled = true;
    ScoreWeights score_weights;
};

struct DayInputs {
    int day = 0;
    std::map<std::string, WeatherSample> weather;  // by site
    std::map<int, double> demand;                  // actual, by load id
};

struct SimulationState {
    GridTopology topology;
    std::map<int, LoadForecaster> forecasters;  // by load id
};

/// One tick: generation from the day's weather, load forecasts, charge
/// targets and allocation, per-system charge distribution with charge
/// degradation, then loads in ascending id draw from their systems with
/// discharge degradation. Forecasters observe the realised demand last.
DailyRecord step_day(SimulationState& state, DayInputs const& inputs, StepOptions const& options);

/// Weather and demand covering a run.
struct ScenarioInputs {
    WeatherTable weather;
    std::map<int, DemandSeries> demand;  // may start before day 0 (history)
};

/// Reads or synthesises the inputs a scenario refers to. Throws IoError for
/// unreadable files.
ScenarioInputs prepare_inputs(ScenarioConfig const& config, GridTopology const& topology);

/// Applies the configured seeded unit variation to every battery unit.
void apply_unit_variation(GridTopology& topology, UnitVariation const& variation, std::uint64_t seed);

struct SystemSummary {
    int system_id = 0;
    int zero_soc_events = 0;
    double final_mean_soh_pct = 0.0;
    double unmet_mwd = 0.0;      // unmet of each load split equally over its systems
    double curtailed_mwd = 0.0;  // curtailment of each source split equally over its systems
};

struct TraceSummary {
    std::vector<SystemSummary> systems;
    int zero_soc_events = 0;
    double final_mean_soh_pct = 0.0;  // fleet mean over units
    double total_demand_mwd = 0.0;
    double total_served_mwd = 0.0;
    double total_unmet_mwd = 0.0;
    double total_generated_mwd = 0.0;
    double total_curtailed_mwd = 0.0;
};

struct SimulationTrace {
    Scenario scenario;  // as run, before unit variation
    std::vector<DailyRecord> records;
    TraceSummary summary;
};

TraceSummary summarize(GridTopology const& topology, std::vector<DailyRecord> const& records,
                       GridTopology const& final_state);

/// Runs config.days ticks from day 0. Deterministic in (config, topology).
/// Throws ValidationError for an invalid config or topology and
/// SimulationError when the inputs run out before the last day.
SimulationTrace run_simulation(ScenarioConfig const& config, GridTopology const& topology);
SimulationTrace run_simulation(ScenarioConfig const& config, GridTopology const& topology,
                               ScenarioInputs const& inputs);

struct SystemComparison {
    int system_id = 0;
    double baseline_soh_pct = 0.0;
    double treatment_soh_pct = 0.0;
    /// Degradation avoided by the treatment: baseline SoH loss minus
    /// treatment SoH loss, i.e. treatment SoH - baseline SoH.
    double soh_gap_pp = 0.0;
    int baseline_zero_soc = 0;
    int treatment_zero_soc = 0;
    double baseline_unmet_mwd = 0.0;
    double treatment_unmet_mwd = 0.0;
};

struct ComparisonReport {
    std::vector<SystemComparison> systems;
    double baseline_soh_pct = 0.0;  // fleet mean over units
    double treatment_soh_pct = 0.0;
    double fleet_soh_gap_pp = 0.0;
    int baseline_zero_soc = 0;
    int treatment_zero_soc = 0;
    double baseline_unmet_mwd = 0.0;
    double treatment_unmet_mwd = 0.0;
};

/// Throws ValidationError when the traces differ in length or systems.
ComparisonReport compare(SimulationTrace const& baseline, SimulationTrace const& treatment);

} // namespace hgrid
