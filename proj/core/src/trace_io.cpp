#include "hgrid/trace_io.hpp"

#include "csv.hpp"
#include "hgrid/error.hpp"

#include <fmt/format.h>

#include <system_error>

namespace hgrid {

namespace {

void ensure_dir(std::filesystem::path const& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError(fmt::format("cannot create output directory '{}'", dir.string()));
}

} // namespace

void write_file_atomic(std::filesystem::path const& path, std::string const& content)
{
    csv::write_atomic(path, content);
}

std::string trace_csv(SimulationTrace const& trace)
{
    std::string out = kTraceCsvHeader;
    out += '\n';
    for (auto const& rec : trace.records) {
        for (auto const& s : rec.systems) {
            fmt::format_to(std::back_inserter(out), "{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", rec.day, s.system_id,
                           s.soc_pct, s.mean_soh_pct, s.charge_in, s.discharge_out);
        }
    }
    return out;
}

std::string summary_csv(SimulationTrace const& trace)
{
    auto const& sum = trace.summary;
    std::string out = kSummaryCsvHeader;
    out += '\n';
    for (auto const& s : sum.systems) {
        fmt::format_to(std::back_inserter(out), "{},{},{:.6f},{:.6f},{:.6f}\n", s.system_id, s.zero_soc_events,
                       s.final_mean_soh_pct, s.unmet_mwd, s.curtailed_mwd);
    }
    fmt::format_to(std::back_inserter(out), "total,{},{:.6f},{:.6f},{:.6f}\n", sum.zero_soc_events,
                   sum.final_mean_soh_pct, sum.total_unmet_mwd, sum.total_curtailed_mwd);
    return out;
}

std::string comparison_csv(ComparisonReport const& rep)
{
    std::string out = kComparisonCsvHeader;
    out += '\n';
    for (auto const& s : rep.systems) {
        fmt::format_to(std::back_inserter(out), "{},{:.6f},{:.6f},{:.6f},{},{},{:.6f},{:.6f}\n", s.system_id,
                       s.baseline_soh_pct, s.treatment_soh_pct, s.soh_gap_pp, s.baseline_zero_soc,
                       s.treatment_zero_soc, s.baseline_unmet_mwd, s.treatment_unmet_mwd);
    }
    fmt::format_to(std::back_inserter(out), "total,{:.6f},{:.6f},{:.6f},{},{},{:.6f},{:.6f}\n",
                   rep.baseline_soh_pct, rep.treatment_soh_pct,
                   rep.fleet_soh_gap_pp, rep.baseline_zero_soc, rep.treatment_zero_soc, rep.baseline_unmet_mwd,
                   rep.treatment_unmet_mwd);
    return out;
}

std::string series_csv(SimulationTrace const& baseline, SimulationTrace const& treatment)
{
    if (baseline.records.size() != treatment.records.size())
        throw ValidationError("traces cover different numbers of days");
    std::string out = kSeriesCsvHeader;
    out += '\n';
    for (std::size_t d = 0; d < baseline.records.size(); ++d) {
        auto const& a = baseline.records[d];
        auto const& b = treatment.records[d];
        if (a.systems.size() != b.systems.size()) throw ValidationError("traces describe different storage systems");
        for (std::size_t i = 0; i < a.systems.size(); ++i) {
            fmt::format_to(std::back_inserter(out), "{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", a.day,
                           a.systems[i].system_id, a.systems[i].soc_pct, b.systems[i].soc_pct,
                           a.systems[i].mean_soh_pct, b.systems[i].mean_soh_pct);
        }
    }
    return out;
}

void write_simulation_outputs(std::filesystem::path const& dir, SimulationTrace const& trace)
{
    ensure_dir(dir);
    write_file_atomic(dir / "trace.csv", trace_csv(trace));
    write_file_atomic(dir / "summary.csv", summary_csv(trace));
    write_file_atomic(dir / "config-echo.json", scenario_to_json(trace.scenario));
}

void write_comparison_outputs(std::filesystem::path const& dir, SimulationTrace const& baseline,
                              SimulationTrace const& treatment, ComparisonReport const& report)
{
    ensure_dir(dir);
    write_file_atomic(dir / "comparison.csv", comparison_csv(report));
    write_file_atomic(dir / "series.csv", series_csv(baseline, treatment));
    write_file_atomic(dir / "config-echo.json", scenario_to_json(baseline.scenario));
}

} // namespace hgrid
