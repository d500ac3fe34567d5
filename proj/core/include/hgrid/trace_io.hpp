#pragma once

#include "hgrid/simulation.hpp"

#include <filesystem>
#include <string>

namespace hgrid {

inline constexpr char const* kTraceCsvHeader = "day,system_id,soc_pct,mean_soh_pct,charge_in_mwd,discharge_out_mwd";
inline constexpr char const* kSummaryCsvHeader =
    "system_id,zero_soc_events,final_mean_soh_pct,total_unmet_mwd,total_curtailed_mwd";
inline constexpr char const* kComparisonCsvHeader =
    "system_id,baseline_soh_pct,treatment_soh_pct,soh_gap_pp,baseline_zero_soc_events,"
    "treatment_zero_soc_events,baseline_unmet_mwd,treatment_unmet_mwd";
inline constexpr char const* kSeriesCsvHeader =
    "day,system_id,baseline_soc_pct,treatment_soc_pct,baseline_mean_soh_pct,treatment_mean_soh_pct";

/// One row per day and system, ascending. Numbers use six decimals.
std::string trace_csv(SimulationTrace const& trace);

/// One row per system plus a final `total` row.
std::string summary_csv(SimulationTrace const& trace);

std::string comparison_csv(ComparisonReport const& report);

/// Day-by-day SoC and SoH of both runs side by side, for plotting.
std::string series_csv(SimulationTrace const& baseline, SimulationTrace const& treatment);

/// Writes trace.csv, summary.csv and config-echo.json into `dir`, creating
/// it if needed. Every file is replaced atomically. Throws IoError.
void write_simulation_outputs(std::filesystem::path const& dir, SimulationTrace const& trace);

/// Writes comparison.csv, series.csv and config-echo.json (the baseline's).
void write_comparison_outputs(std::filesystem::path const& dir, SimulationTrace const& baseline,
                              SimulationTrace const& treatment, ComparisonReport const& report);

/// Whole-file write through a temporary sibling and a rename.
void write_file_atomic(std::filesystem::path const& path, std::string const& content);

} // namespace hgrid
