#include "hgrid/error.hpp"
#include "hgrid/generation.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace hgrid;

// Plant 1 of the reference grid: 50 turbines of 10000 m^2 swept area.
WindPlantParams wind_plant_1()
{
    WindPlantParams p;
    p.turbine_count = 50;
    return p;
}

TEST(SolarPower, ReferencePlantValues)
{
    EXPECT_NEAR(solar_power(1000.0, {900000.0, 0.21}), 189.0, 189.0 * 1e-12);
    EXPECT_NEAR(solar_power(500.0, {1500000.0, 0.21}), 157.5, 157.5 * 1e-12);
    EXPECT_EQ(solar_power(0.0, {1500000.0, 0.21}), 0.0);
}

TEST(SolarPower, ScalesLinearlyInIrradiance)
{
    SolarPlantParams const p{900000.0, 0.21};
    for (double i : {1.0, 37.5, 250.0, 999.0}) {
        for (double k : {0.5, 2.0, 3.7}) {
            double const a = solar_power(k * i, p);
            double const b = k * solar_power(i, p);
            EXPECT_NEAR(a, b, std::abs(b) * 1e-12);
        }
    }
}

TEST(SolarPower, RejectsBadInput)
{
    EXPECT_THROW(solar_power(-1.0, {900000.0, 0.21}), InputError);
    EXPECT_THROW(solar_power(100.0, {-5.0, 0.21}), InputError);
    EXPECT_THROW(solar_power(100.0, {900000.0, 1.5}), InputError);
}

TEST(WindPower, ReferencePlantValues)
{
    // 50 * 0.4 * 1.225 * 10000 * 10^3 / 2 W = 122.5 MW
    EXPECT_NEAR(wind_power(10.0, wind_plant_1()), 122.5, 122.5 * 1e-12);
    EXPECT_EQ(wind_power(2.0, wind_plant_1()), 0.0);
    EXPECT_EQ(wind_power(30.0, wind_plant_1()), 0.0);
}

TEST(WindPower, CutInAndCutOutAreInclusive)
{
    auto const p = wind_plant_1();
    double const per_v3 = 50 * 0.4 * 1.225 * 10000.0 / 2.0 / 1e6;
    EXPECT_NEAR(wind_power(3.0, p), per_v3 * 27.0, 1e-12);
    EXPECT_NEAR(wind_power(25.0, p), per_v3 * 15625.0, 1e-9);
    EXPECT_EQ(wind_power(std::nextafter(3.0, 0.0), p), 0.0);
    EXPECT_EQ(wind_power(std::nextafter(25.0, 100.0), p), 0.0);
}

TEST(WindPower, MonotoneInsideOperatingRange)
{
    auto const p = wind_plant_1();
    double prev = wind_power(3.0, p);
    for (double v = 3.05; v <= 25.0; v += 0.05) {
        double const now = wind_power(v, p);
        EXPECT_GT(now, prev) << "at " << v;
        prev = now;
    }
}

TEST(WindPower, DoublingTurbinesDoublesOutput)
{
    auto p = wind_plant_1();
    auto q = p;
    q.turbine_count *= 2;
    for (double v : {0.0, 2.9, 3.0, 7.3, 12.0, 25.0, 26.0}) {
        EXPECT_NEAR(wind_power(v, q), 2.0 * wind_power(v, p), 1e-9);
    }
}

TEST(WindPower, RejectsBadInput)
{
    EXPECT_THROW(wind_power(-0.1, wind_plant_1()), InputError);
    auto p = wind_plant_1();
    p.power_coefficient = 0.7;  // above the Betz limit
    EXPECT_THROW(wind_power(10.0, p), InputError);
    p = wind_plant_1();
    p.cut_in_ms = 30.0;
    EXPECT_THROW(wind_power(10.0, p), InputError);
    EXPECT_FALSE(param_problems(p).empty());
    EXPECT_TRUE(param_problems(wind_plant_1()).empty());
}

TEST(DailyEnergy, IdentityUnderDailyTick)
{
    EXPECT_EQ(daily_energy(0.0), 0.0);
    EXPECT_EQ(daily_energy(189.0), 189.0);
    EXPECT_EQ(daily_energy(122.5), 122.5);
    EXPECT_THROW(daily_energy(-1.0), InputError);
}

} // namespace
