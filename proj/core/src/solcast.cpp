#include "hgrid/error.hpp"
#include "hgrid/weather.hpp"

#include <cstdlib>
#include <fmt/format.h>
#include <json.hpp>

#ifdef HGRID_WITH_SOLCAST
#include <httplib.h>
#endif

namespace hgrid {

std::vector<WeatherSample> parse_solcast_forecast(std::string_view json_text,
                                                  std::string const& site_id,
                                                  int first_day_index)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::parse_error const& e) {
        throw ValidationError(fmt::format("solcast response is not JSON: {}", e.what()));
    }
    if (!doc.contains("forecasts") || !doc["forecasts"].is_array()) {
        throw ValidationError("solcast response has no 'forecasts' array");
    }

    struct Accumulator {
        std::string date;
        double ghi_sum = 0.0;
        double wind_sum = 0.0;
        int count = 0;
    };
    std::vector<Accumulator> days;
    for (auto const& period : doc["forecasts"]) {
        if (!period.contains("ghi") || !period.contains("wind_speed_10m") || !period.contains("period_end")) {
            throw ValidationError("solcast period lacks ghi, wind_speed_10m or period_end");
        }
        auto const stamp = period["period_end"].get<std::string>();
        if (stamp.size() < 10) {
            throw ValidationError(fmt::format("bad period_end '{}'", stamp));
        }
        auto date = stamp.substr(0, 10);
        if (days.empty() || days.back().date != date) {
            days.push_back({std::move(date)});
        }
        double const ghi = period["ghi"].get<double>();
        double const wind = period["wind_speed_10m"].get<double>();
        if (ghi < 0.0 || wind < 0.0) {
            throw ValidationError(fmt::format("negative ghi or wind speed at {}", stamp));
        }
        days.back().ghi_sum += ghi;
        days.back().wind_sum += wind;
        days.back().count += 1;
    }

    std::vector<WeatherSample> out;
    out.reserve(days.size());
    for (std::size_t i = 0; i < days.size(); ++i) {
        auto const& d = days[i];
        out.push_back({first_day_index + static_cast<int>(i), site_id, d.ghi_sum / d.count, d.wind_sum / d.count});
    }
    return out;
}

std::vector<WeatherSample> fetch_solcast_forecast(SolcastRequest const& request)
{
    std::string key;
    if (request.api_key) {
        key = *request.api_key;
    } else if (char const* env = std::getenv("SOLCAST_API_KEY")) {
        key = env;
    }
    if (key.empty()) {
        throw ValidationError("no Solcast API key (set SOLCAST_API_KEY)");
    }

#ifdef HGRID_WITH_SOLCAST
    httplib::Client client(request.base_url);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    httplib::Headers headers = {{"Authorization", "Bearer " + key}};
    auto const query = fmt::format("{}?latitude={}&longitude={}&output_parameters=ghi,wind_speed_10m&format=json",
                                   request.path, request.latitude, request.longitude);
    auto res = client.Get(query, headers);
    if (!res) {
        throw IoError(fmt::format("solcast request failed: {}", httplib::to_string(res.error())));
    }
    if (res->status != 200) {
        throw IoError(fmt::format("solcast returned HTTP {}", res->status));
    }
    return parse_solcast_forecast(res->body, request.site_id, request.first_day_index);
#else
    throw IoError("built without live Solcast support");
#endif
}

} // namespace hgrid
