#pragma once

#include "hgrid/model.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgrid {

/// One day of weather at one site. `ghi` is the day-mean global horizontal
/// irradiance, so plant power computed from it is also a day mean.
struct WeatherSample {
    int day_index = 0;
    std::string site_id;
    double ghi = 0.0;         // W/m^2
    double wind_speed = 0.0;  // m/s

    bool operator==(WeatherSample const&) const = default;
};

/// Exact header of the weather CSV format.
inline constexpr std::string_view kWeatherCsvHeader = "site_id,day_index,ghi_w_m2,wind_speed_ms";

/// Reads a weather CSV. Rows are returned in file order; a repeated
/// (site, day) pair, a negative value or a malformed field raises ParseError
/// naming the line. A missing file raises IoError.
std::vector<WeatherSample> load_weather_csv(std::filesystem::path const& path);

void write_weather_csv(std::filesystem::path const& path, std::span<WeatherSample const> samples);

/// Samples indexed by (site, day).
class WeatherTable {
public:
    WeatherTable() = default;
    explicit WeatherTable(std::span<WeatherSample const> samples);

    /// Throws ValidationError if (site, day) is already present.
    void add(WeatherSample sample);

    WeatherSample const* find(std::string const& site_id, int day_index) const;

    /// Every site's sample for one day, keyed by site id.
    std::map<std::string, WeatherSample> day(int day_index) const;

    std::size_t size() const noexcept;

private:
    std::map<std::string, std::map<int, WeatherSample>> by_site_;
};

/// Expected energy (MWd) from each source for the day the samples describe.
/// Throws ValidationError when a source's site has no sample.
std::map<int, double> predict_generation(std::map<std::string, WeatherSample> const& samples_by_site,
                                         std::span<EnergySource const> sources);

/// Maps a Solcast-style forecast document onto daily samples. Periods are
/// grouped by the calendar date of `period_end`; each day gets the mean of
/// `ghi` and of `wind_speed_10m`. Days are numbered from `first_day_index`
/// in order of appearance.
std::vector<WeatherSample> parse_solcast_forecast(std::string_view json_text,
                                                  std::string const& site_id,
                                                  int first_day_index);

struct SolcastRequest {
    std::string base_url = "https://api.solcast.com.au";
    std::string path = "/data/forecast/radiation_and_weather";
    double latitude = 0.0;
    double longitude = 0.0;
    std::string site_id;
    int first_day_index = 0;
    /// Falls back to the SOLCAST_API_KEY environment variable when empty.
    std::optional<std::string> api_key;
};

/// Live fetch of a forecast document followed by parse_solcast_forecast.
/// Throws IoError on transport or HTTP failure and ValidationError when no
/// API key is available.
std::vector<WeatherSample> fetch_solcast_forecast(SolcastRequest const& request);

} // namespace hgrid
