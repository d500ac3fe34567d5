#pragma once

#include "hgrid/health.hpp"
#include "hgrid/model.hpp"
#include "hgrid/sarima.hpp"
#include "hgrid/synthetic.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgrid {

enum class ForecastMethod { sarima, seasonal_naive };

struct ForecastConfig {
    ForecastMethod method = ForecastMethod::sarima;
    SarimaOrders orders{1, 0, 0, 1, 0, 0, 7};
    int refit_interval_days = 30;
    int training_window_days = 365;
};

/// Seeded spread of unit condition at the start of a run. A unit with draw
/// u in (0, 1) starts at soh = 100 - u * (100 - initial_soh_min) and its
/// degradation rates are scaled by 1 + u * (rate_multiplier_max - 1), so
/// units that start in worse condition also wear faster.
struct UnitVariation {
    double initial_soh_min = 100.0;
    double rate_multiplier_max = 1.0;

    bool active() const noexcept { return initial_soh_min < 100.0 || rate_multiplier_max != 1.0; }
};

struct DegradationConfig {
    double r_charge = kDefaultChargeDegradation;
    double r_discharge = kDefaultDischargeDegradation;
    UnitVariation variation;
    ScoreWeights score_weights;
};

struct WeatherConfig {
    std::optional<std::filesystem::path> csv;
    SyntheticWeatherParams defaults;
    std::map<std::string, SyntheticWeatherParams> sites;

    SyntheticWeatherParams const& params_for(std::string const& site) const;
};

struct LoadDataConfig {
    std::optional<std::filesystem::path> csv;
    /// When > 0, the fleet's mean daily demand is this fraction of the mean
    /// daily generation over the simulated days; otherwise total_mean_mwd.
    double generation_fraction = 0.85;
    double total_mean_mwd = 0.0;
    /// Relative share of the total per load; loads not listed weigh 1.
    std::map<int, double> weights;
    int history_days = 60;
    SyntheticLoadParams params;
};

struct ScenarioConfig {
    std::string name = "scenario";
    int days = 365;
    bool priority_enabled = true;
    bool health_enabled = true;
    std::uint64_t seed = 42;
    ForecastConfig forecasting;
    DegradationConfig degradation;
    WeatherConfig weather;
    LoadDataConfig load_data;
};

/// Constraint violations of a configuration; empty when usable.
std::vector<std::string> config_problems(ScenarioConfig const& config);

struct Scenario {
    ScenarioConfig config;
    GridTopology topology;
};

/// Parses a scenario document. Relative CSV paths resolve against
/// `base_dir`. Throws ValidationError for malformed JSON, unknown keys or
/// values of the wrong type. Topology invariants are not checked here.
Scenario parse_scenario(std::string_view json_text, std::filesystem::path const& base_dir = {});

/// Reads and parses a scenario file; IoError when it cannot be read.
Scenario load_scenario(std::filesystem::path const& path);

/// Reference topology with synthetic weather and demand at the built-in defaults.
Scenario reference_scenario();

/// Fully resolved scenario as a JSON document that parse_scenario accepts.
std::string scenario_to_json(Scenario const& scenario);

} // namespace hgrid
