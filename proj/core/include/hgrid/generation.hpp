#pragma once

#include <string>
#include <vector>

namespace hgrid {

/// Betz limit on the power coefficient of an open rotor.
inline constexpr double kBetzLimit = 16.0 / 27.0;

struct SolarPlantParams {
    double area_m2 = 0.0;
    double efficiency = 0.21;
};

struct WindPlantParams {
    double power_coefficient = 0.4;
    double air_density = 1.225;  // kg/m^3
    double rotor_area_m2 = 10000.0;
    int turbine_count = 1;
    double cut_in_ms = 3.0;
    double cut_out_ms = 25.0;
};

/// Human-readable list of violated parameter constraints; empty when valid.
std::vector<std::string> param_problems(SolarPlantParams const& p);
std::vector<std::string> param_problems(WindPlantParams const& p);

/// Plant output in MW for a given irradiance (W/m^2): I * A * eta.
/// Throws InputError for negative irradiance or invalid parameters.
double solar_power(double irradiance_w_m2, SolarPlantParams const& p);

/// Plant output in MW for a hub wind speed (m/s). Each turbine produces
/// Cp * rho * A * V^3 / 2 inside [cut_in, cut_out] and nothing outside it.
double wind_power(double speed_ms, WindPlantParams const& p);

/// Energy over one simulation tick (one day) at constant power, in MWd.
double daily_energy(double power_mw);

} // namespace hgrid
