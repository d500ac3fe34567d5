#include "hgrid/demand.hpp"

#include "csv.hpp"
#include "hgrid/error.hpp"

#include <fmt/format.h>
#include <limits>

namespace hgrid {

std::vector<double> DemandSeries::before(int day) const
{
    if (day <= first_day) {
        return {};
    }
    auto const n = std::min(values.size(), static_cast<std::size_t>(day - first_day));
    return {values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::map<int, DemandSeries> load_demand_csv(std::filesystem::path const& path)
{
    auto const lines = csv::read_lines(path);
    std::string const source = path.string();
    if (lines.empty() || lines.front() != kDemandCsvHeader) {
        throw ParseError(source, 1, fmt::format("expected header '{}'", kDemandCsvHeader));
    }

    std::map<int, std::map<int, std::pair<double, std::size_t>>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t const line_no = i + 1;
        if (lines[i].empty()) {
            continue;
        }
        auto fields = csv::split(lines[i]);
        if (fields.size() != 3) {
            throw ParseError(source, line_no, fmt::format("expected 3 fields, found {}", fields.size()));
        }
        long long load = 0;
        long long day = 0;
        double demand = 0.0;
        if (!csv::parse_int(fields[0], load) || load < std::numeric_limits<int>::min()
            || load > std::numeric_limits<int>::max()) {
            throw ParseError(source, line_no, fmt::format("bad load_id '{}'", fields[0]));
        }
        if (!csv::parse_int(fields[1], day) || day < std::numeric_limits<int>::min() / 2
            || day > std::numeric_limits<int>::max() / 2) {
            throw ParseError(source, line_no, fmt::format("bad day_index '{}'", fields[1]));
        }
        if (!csv::parse_double(fields[2], demand)) {
            throw ParseError(source, line_no, fmt::format("bad demand_mwd '{}'", fields[2]));
        }
        if (demand < 0.0) {
            throw ParseError(source, line_no, fmt::format("negative demand_mwd {}", demand));
        }
        auto [it, inserted] = rows[static_cast<int>(load)].emplace(static_cast<int>(day), std::pair{demand, line_no});
        if (!inserted) {
            throw ParseError(source, line_no, fmt::format("duplicate row for load {} day {}", load, day));
        }
    }

    std::map<int, DemandSeries> out;
    for (auto const& [load, days] : rows) {
        DemandSeries series;
        series.first_day = days.begin()->first;
        int expected = series.first_day;
        for (auto const& [day, entry] : days) {
            if (day != expected) {
                throw ParseError(source, entry.second,
                                 fmt::format("load {} skips from day {} to day {}", load, expected - 1, day));
            }
            series.values.push_back(entry.first);
            ++expected;
        }
        out.emplace(load, std::move(series));
    }
    return out;
}

void write_demand_csv(std::filesystem::path const& path, std::map<int, DemandSeries> const& series)
{
    std::string out(kDemandCsvHeader);
    out += '\n';
    for (auto const& [load, s] : series) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            out += fmt::format("{},{},{:.6f}\n", load, s.first_day + static_cast<int>(i), s.values[i]);
        }
    }
    csv::write_atomic(path, out);
}

} // namespace hgrid
