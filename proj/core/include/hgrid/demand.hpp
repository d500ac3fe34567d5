#pragma once

#include <filesystem>
#include <map>
#include <string_view>
#include <vector>

namespace hgrid {

/// Exact header of the load-history CSV format.
inline constexpr std::string_view kDemandCsvHeader = "load_id,day_index,demand_mwd";

/// One load's daily demand on consecutive days starting at `first_day`.
/// Negative day indices are history that precedes the simulated period.
struct DemandSeries {
    int first_day = 0;
    std::vector<double> values;

    int end_day() const noexcept { return first_day + static_cast<int>(values.size()); }
    bool covers(int day) const noexcept { return day >= first_day && day < end_day(); }
    double at(int day) const { return values.at(static_cast<std::size_t>(day - first_day)); }
    /// Values strictly before `day`.
    std::vector<double> before(int day) const;
};

/// Reads `load_id,day_index,demand_mwd`. Each load's days must be
/// consecutive once sorted; gaps, duplicates, negative demand and malformed
/// rows raise ParseError. A missing file raises IoError.
std::map<int, DemandSeries> load_demand_csv(std::filesystem::path const& path);

void write_demand_csv(std::filesystem::path const& path, std::map<int, DemandSeries> const& series);

} // namespace hgrid
