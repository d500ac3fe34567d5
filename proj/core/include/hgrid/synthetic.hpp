#pragma once

#include "hgrid/weather.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hgrid {

/// Constants of the synthetic weather generator:
///
///   ghi_d  = max(0, ghi_mean * (1 + ghi_amplitude * sin(2 pi d / 365 + ghi_phase)) * cloud_d)
///   wind_d = max(0, wind_mean + wind_amplitude * sin(2 pi d / 365 + wind_phase) + wind_noise_d)
///
/// cloud_d lies in [cloud_min, cloud_max]: a persistent Gaussian AR(1)
/// process mapped to a uniform variate u, then cloud = cloud_max -
/// (cloud_max - cloud_min) * u^cloud_shape. wind_noise_d is a Gaussian AR(1)
/// process with stationary standard deviation wind_noise_sd.
/// With `noise` off, cloud_d = 1 and wind_noise_d = 0.
struct SyntheticWeatherParams {
    double ghi_mean = 250.0;  // W/m^2, day mean under clear sky
    double ghi_amplitude = 0.2;
    double ghi_phase = 0.0;   // radians
    double cloud_min = 0.5;
    double cloud_max = 1.0;
    double cloud_shape = 2.0;
    double cloud_persistence = 0.6;
    double wind_mean = 6.5;   // m/s
    double wind_amplitude = 1.5;
    double wind_phase = 3.14159265358979323846;
    double wind_noise_sd = 0.6;
    double wind_persistence = 0.6;
    bool noise = true;
};

/// Deterministic daily weather for one site, days [first_day, first_day + days).
/// The stream depends on (seed, site) only.
std::vector<WeatherSample> synth_weather(std::uint64_t seed,
                                         int days,
                                         std::string const& site,
                                         SyntheticWeatherParams const& params = {},
                                         int first_day = 0);

/// Constants of the synthetic demand generator. For a load with mean m:
///
///   demand_d = max(0, m * (1 + weekly_amplitude * sin(2 pi d / 7)
///                          + annual_amplitude * sin(2 pi d / 365 + annual_phase)) * (1 + eta_d))
///
/// where eta_d is a Gaussian AR(1) process with stationary standard
/// deviation noise_sd.
struct SyntheticLoadParams {
    double weekly_amplitude = 0.08;
    double annual_amplitude = 0.05;
    double annual_phase = 0.0;
    double noise_sd = 0.04;
    double noise_persistence = 0.5;
};

/// Daily demand for days [first_day, first_day + days) of one load.
std::vector<double> synth_load(std::uint64_t seed,
                               int load_id,
                               double mean_mwd,
                               int days,
                               SyntheticLoadParams const& params = {},
                               int first_day = 0);

/// Seasonal AR test signal: (1 - phi B)(1 - Phi B^s)(y_t - mean) = e_t with
/// e_t ~ N(0, sigma^2), started from the mean after a 200-step burn-in.
std::vector<double> synth_seasonal_ar(std::uint64_t seed,
                                      std::size_t length,
                                      double mean,
                                      double phi,
                                      double seasonal_phi,
                                      int s,
                                      double sigma);

/// Small deterministic generator shared by the synthetic inputs
/// (splitmix64 seeding, xoshiro256** stream). Output is identical on every
/// platform, unlike the standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    static Rng for_stream(std::uint64_t seed, std::string const& stream);

    std::uint64_t next();
    /// Uniform in (0, 1).
    double uniform();
    double normal();

private:
    std::uint64_t s_[4];
};

} // namespace hgrid
