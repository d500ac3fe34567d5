#include "hgrid/weather.hpp"

#include "csv.hpp"
#include "hgrid/error.hpp"

#include <fmt/format.h>
#include <limits>
#include <set>
#include <utility>

namespace hgrid {

std::vector<WeatherSample> load_weather_csv(std::filesystem::path const& path)
{
    auto const lines = csv::read_lines(path);
    std::string const source = path.string();
    if (lines.empty() || lines.front() != kWeatherCsvHeader) {
        throw ParseError(source, 1, fmt::format("expected header '{}'", kWeatherCsvHeader));
    }

    std::vector<WeatherSample> samples;
    std::set<std::pair<std::string, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t const line_no = i + 1;
        if (lines[i].empty()) {
            continue;
        }
        auto fields = csv::split(lines[i]);
        if (fields.size() != 4) {
            throw ParseError(source, line_no, fmt::format("expected 4 fields, found {}", fields.size()));
        }
        WeatherSample s;
        s.site_id = std::string(fields[0]);
        if (s.site_id.empty()) {
            throw ParseError(source, line_no, "empty site_id");
        }
        long long day = 0;
        if (!csv::parse_int(fields[1], day) || day < 0 || day > std::numeric_limits<int>::max()) {
            throw ParseError(source, line_no, fmt::format("bad day_index '{}'", fields[1]));
        }
        s.day_index = static_cast<int>(day);
        if (!csv::parse_double(fields[2], s.ghi)) {
            throw ParseError(source, line_no, fmt::format("bad ghi_w_m2 '{}'", fields[2]));
        }
        if (s.ghi < 0.0) {
            throw ParseError(source, line_no, fmt::format("negative ghi_w_m2 {}", s.ghi));
        }
        if (!csv::parse_double(fields[3], s.wind_speed)) {
            throw ParseError(source, line_no, fmt::format("bad wind_speed_ms '{}'", fields[3]));
        }
        if (s.wind_speed < 0.0) {
            throw ParseError(source, line_no, fmt::format("negative wind_speed_ms {}", s.wind_speed));
        }
        if (!seen.emplace(s.site_id, s.day_index).second) {
            throw ParseError(source, line_no,
                             fmt::format("duplicate row for site '{}' day {}", s.site_id, s.day_index));
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

void write_weather_csv(std::filesystem::path const& path, std::span<WeatherSample const> samples)
{
    std::string out(kWeatherCsvHeader);
    out += '\n';
    for (auto const& s : samples) {
        out += fmt::format("{},{},{:.6f},{:.6f}\n", s.site_id, s.day_index, s.ghi, s.wind_speed);
    }
    csv::write_atomic(path, out);
}

WeatherTable::WeatherTable(std::span<WeatherSample const> samples)
{
    for (auto const& s : samples) {
        add(s);
    }
}

void WeatherTable::add(WeatherSample sample)
{
    auto& site = by_site_[sample.site_id];
    int const day = sample.day_index;
    if (!site.emplace(day, std::move(sample)).second) {
        throw ValidationError(fmt::format("duplicate weather sample for day {}", day));
    }
}

WeatherSample const* WeatherTable::find(std::string const& site_id, int day_index) const
{
    auto site = by_site_.find(site_id);
    if (site == by_site_.end()) {
        return nullptr;
    }
    auto it = site->second.find(day_index);
    return it == site->second.end() ? nullptr : &it->second;
}

std::map<std::string, WeatherSample> WeatherTable::day(int day_index) const
{
    std::map<std::string, WeatherSample> out;
    for (auto const& [site, days] : by_site_) {
        if (auto it = days.find(day_index); it != days.end()) {
            out.emplace(site, it->second);
        }
    }
    return out;
}

std::size_t WeatherTable::size() const noexcept
{
    std::size_t n = 0;
    for (auto const& [site, days] : by_site_) {
        n += days.size();
    }
    return n;
}

std::map<int, double> predict_generation(std::map<std::string, WeatherSample> const& samples_by_site,
                                         std::span<EnergySource const> sources)
{
    std::map<int, double> out;
    for (auto const& src : sources) {
        auto it = samples_by_site.find(src.site_id);
        if (it == samples_by_site.end()) {
            throw ValidationError(
                fmt::format("no weather sample for site '{}' (source {})", src.site_id, src.id));
        }
        auto const& sample = it->second;
        double const power = std::visit(
            [&](auto const& p) -> double {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, SolarPlantParams>) {
                    return solar_power(sample.ghi, p);
                } else {
                    return wind_power(sample.wind_speed, p);
                }
            },
            src.params);
        out[src.id] = daily_energy(power);
    }
    return out;
}

} // namespace hgrid
