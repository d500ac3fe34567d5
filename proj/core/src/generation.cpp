#include "hgrid/generation.hpp"

#include "hgrid/error.hpp"

#include <cmath>
#include <fmt/format.h>

namespace hgrid {

namespace {

constexpr double kWattsPerMegawatt = 1.0e6;

template <typename Params>
void require_valid(Params const& p)
{
    auto problems = param_problems(p);
    if (!problems.empty()) {
        throw InputError(problems.front());
    }
}

} // namespace

std::vector<std::string> param_problems(SolarPlantParams const& p)
{
    std::vector<std::string> out;
    if (!(p.area_m2 > 0.0)) {
        out.push_back(fmt::format("solar area must be > 0 (got {})", p.area_m2));
    }
    if (!(p.efficiency > 0.0 && p.efficiency <= 1.0)) {
        out.push_back(fmt::format("solar efficiency must be in (0, 1] (got {})", p.efficiency));
    }
    return out;
}

std::vector<std::string> param_problems(WindPlantParams const& p)
{
    std::vector<std::string> out;
    if (!(p.power_coefficient > 0.0 && p.power_coefficient <= kBetzLimit)) {
        out.push_back(fmt::format("power coefficient must be in (0, 16/27] (got {})", p.power_coefficient));
    }
    if (!(p.air_density > 0.0)) {
        out.push_back(fmt::format("air density must be > 0 (got {})", p.air_density));
    }
    if (!(p.rotor_area_m2 > 0.0)) {
        out.push_back(fmt::format("rotor area must be > 0 (got {})", p.rotor_area_m2));
    }
    if (p.turbine_count < 1) {
        out.push_back(fmt::format("turbine count must be >= 1 (got {})", p.turbine_count));
    }
    if (!(p.cut_in_ms >= 0.0)) {
        out.push_back(fmt::format("cut-in speed must be >= 0 (got {})", p.cut_in_ms));
    }
    if (!(p.cut_out_ms > p.cut_in_ms)) {
        out.push_back(fmt::format("cut-out speed {} must exceed cut-in speed {}", p.cut_out_ms, p.cut_in_ms));
    }
    return out;
}

double solar_power(double irradiance_w_m2, SolarPlantParams const& p)
{
    if (!(irradiance_w_m2 >= 0.0)) {
        throw InputError(fmt::format("irradiance must be >= 0 (got {})", irradiance_w_m2));
    }
    require_valid(p);
    return irradiance_w_m2 * p.area_m2 * p.efficiency / kWattsPerMegawatt;
}

double wind_power(double speed_ms, WindPlantParams const& p)
{
    if (!(speed_ms >= 0.0)) {
        throw InputError(fmt::format("wind speed must be >= 0 (got {})", speed_ms));
    }
    require_valid(p);
    // Both bounds inclusive: a turbine at exactly cut-out is still producing.
    if (speed_ms < p.cut_in_ms || speed_ms > p.cut_out_ms) {
        return 0.0;
    }
    double const per_turbine_w =
        p.power_coefficient * p.air_density * p.rotor_area_m2 * speed_ms * speed_ms * speed_ms / 2.0;
    return static_cast<double>(p.turbine_count) * per_turbine_w / kWattsPerMegawatt;
}

double daily_energy(double power_mw)
{
    if (!(power_mw >= 0.0)) {
        throw InputError(fmt::format("power must be >= 0 (got {})", power_mw));
    }
    return power_mw;
}

} // namespace hgrid
