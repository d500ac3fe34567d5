#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace hgrid::cli {

enum ExitStatus : int {
    kOk = 0,
    kInvalid = 1,     // validation failure or unusable input
    kIoFailure = 2,   // unreadable input, unwritable output
    kSimFailure = 3,  // simulation could not complete
};

struct RunOverrides {
    std::optional<int> days;
    std::optional<bool> priority;
    std::optional<bool> health;
    std::optional<std::uint64_t> seed;
};

int cmd_validate(std::filesystem::path const& config, std::ostream& out, std::ostream& err);

int cmd_simulate(std::filesystem::path const& config, std::filesystem::path const& out_dir,
                 RunOverrides const& overrides, std::ostream& out, std::ostream& err);

enum class CompareAxis { priority, health };

/// Runs the scenario with the axis toggle off (baseline) and on
/// (treatment); the other toggle keeps its configured value.
int cmd_compare(std::filesystem::path const& config, std::filesystem::path const& out_dir, CompareAxis axis,
                RunOverrides const& overrides, std::ostream& out, std::ostream& err);

struct ForecastOptions {
    std::string orders = "1,0,0,1,0,0,7";  // p,d,q,P,D,Q,s
    int horizon = 1;
    std::optional<int> load_id;  // required when the file holds several loads
};

/// Fits a SARIMA model to a demand history (load_id,day_index,demand_mwd)
/// and prints its coefficients and forecasts.
int cmd_forecast(std::filesystem::path const& history, ForecastOptions const& options, std::ostream& out,
                 std::ostream& err);

} // namespace hgrid::cli
