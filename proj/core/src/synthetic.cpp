#include "hgrid/synthetic.hpp"

#include "hgrid/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace hgrid {

namespace {

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string const& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

/// Gaussian AR(1) with unit stationary variance.
class Ar1 {
public:
    Ar1(Rng& rng, double rho) : rng_(rng), rho_(std::clamp(rho, 0.0, 0.999)), state_(rng.normal()) {}

    double next()
    {
        state_ = rho_ * state_ + std::sqrt(1.0 - rho_ * rho_) * rng_.normal();
        return state_;
    }

private:
    Rng& rng_;
    double rho_;
    double state_;
};

double standard_normal_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

Rng::Rng(std::uint64_t seed)
{
    std::uint64_t state = seed;
    for (auto& word : s_) {
        word = splitmix64(state);
    }
}

Rng Rng::for_stream(std::uint64_t seed, std::string const& stream)
{
    std::uint64_t mixed = seed ^ fnv1a(stream);
    return Rng(splitmix64(mixed));
}

std::uint64_t Rng::next()
{
    std::uint64_t const result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t const t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform()
{
    // 53 random bits, shifted off zero.
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal()
{
    double const u1 = uniform();
    double const u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::vector<WeatherSample> synth_weather(std::uint64_t seed,
                                         int days,
                                         std::string const& site,
                                         SyntheticWeatherParams const& p,
                                         int first_day)
{
    if (days < 1) {
        throw InputError(fmt::format("synthetic weather needs days >= 1 (got {})", days));
    }
    if (!(p.cloud_min >= 0.0 && p.cloud_min <= p.cloud_max) || !(p.cloud_shape > 0.0)) {
        throw InputError("cloud factor bounds must satisfy 0 <= cloud_min <= cloud_max and cloud_shape > 0");
    }

    Rng cloud_rng = Rng::for_stream(seed, "weather/cloud/" + site);
    Rng wind_rng = Rng::for_stream(seed, "weather/wind/" + site);
    Ar1 cloud_noise(cloud_rng, p.cloud_persistence);
    Ar1 wind_noise(wind_rng, p.wind_persistence);

    std::vector<WeatherSample> out;
    out.reserve(static_cast<std::size_t>(days));
    for (int i = 0; i < days; ++i) {
        int const d = first_day + i;
        double const season = kTwoPi * d / 365.0;
        double cloud = 1.0;
        double wind_dev = 0.0;
        if (p.noise) {
            double const u = standard_normal_cdf(cloud_noise.next());
            cloud = p.cloud_max - (p.cloud_max - p.cloud_min) * std::pow(u, p.cloud_shape);
            wind_dev = p.wind_noise_sd * wind_noise.next();
        }
        double const ghi = std::max(0.0, p.ghi_mean * (1.0 + p.ghi_amplitude * std::sin(season + p.ghi_phase)) * cloud);
        double const wind = std::max(0.0, p.wind_mean + p.wind_amplitude * std::sin(season + p.wind_phase) + wind_dev);
        out.push_back({d, site, ghi, wind});
    }
    return out;
}

std::vector<double> synth_load(std::uint64_t seed,
                               int load_id,
                               double mean_mwd,
                               int days,
                               SyntheticLoadParams const& p,
                               int first_day)
{
    if (days < 0 || !(mean_mwd >= 0.0)) {
        throw InputError("synthetic load needs days >= 0 and a non-negative mean");
    }
    Rng rng = Rng::for_stream(seed, fmt::format("load/{}", load_id));
    Ar1 noise(rng, p.noise_persistence);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(days));
    for (int i = 0; i < days; ++i) {
        int const d = first_day + i;
        double const shape = 1.0 + p.weekly_amplitude * std::sin(kTwoPi * d / 7.0)
                             + p.annual_amplitude * std::sin(kTwoPi * d / 365.0 + p.annual_phase);
        double const eta = p.noise_sd * noise.next();
        out.push_back(std::max(0.0, mean_mwd * shape * (1.0 + eta)));
    }
    return out;
}

std::vector<double> synth_seasonal_ar(std::uint64_t seed,
                                      std::size_t length,
                                      double mean,
                                      double phi,
                                      double seasonal_phi,
                                      int s,
                                      double sigma)
{
    if (s < 1) {
        throw InputError("season length must be >= 1");
    }
    Rng rng(seed);
    std::size_t const burn_in = 200;
    std::size_t const lag = static_cast<std::size_t>(s);
    std::vector<double> x(length + burn_in, 0.0);
    for (std::size_t t = 0; t < x.size(); ++t) {
        double v = sigma * rng.normal();
        if (t >= 1) {
            v += phi * x[t - 1];
        }
        if (t >= lag) {
            v += seasonal_phi * x[t - lag];
        }
        if (t >= lag + 1) {
            v -= phi * seasonal_phi * x[t - lag - 1];
        }
        x[t] = v;
    }
    std::vector<double> out(x.begin() + static_cast<std::ptrdiff_t>(burn_in), x.end());
    for (auto& v : out) {
        v += mean;
    }
    return out;
}

} // namespace hgrid
