#include "hgrid/error.hpp"
#include "hgrid/sarima.hpp"
#include "hgrid/synthetic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using namespace hgrid;

SarimaOrders orders(int p, int d, int q, int P, int D, int Q, int s = 7)
{
    return {p, d, q, P, D, Q, s};
}

TEST(SarimaOrders, Validation)
{
    EXPECT_TRUE(order_problems(orders(1, 0, 0, 1, 0, 0)).empty());
    EXPECT_TRUE(order_problems(orders(0, 0, 0, 0, 0, 0)).empty());
    EXPECT_FALSE(order_problems(orders(-1, 0, 0, 0, 0, 0)).empty());
    EXPECT_FALSE(order_problems(orders(1, 0, 0, 0, 0, 0, 1)).empty());
    EXPECT_FALSE(order_problems(orders(0, 2, 0, 0, 1, 0)).empty());
}

TEST(FitSarima, ConstantSeries)
{
    std::vector<double> const y(60, 100.0);
    auto const m = fit_sarima(y, orders(0, 0, 0, 0, 0, 0));
    EXPECT_NEAR(m.intercept, 100.0, 1e-9);
    EXPECT_NEAR(forecast_one(m), 100.0, 100.0 * 1e-6);

    auto const ar = fit_sarima(y, orders(1, 0, 0, 1, 0, 0));
    EXPECT_NEAR(forecast_one(ar), 100.0, 100.0 * 1e-6);
}

TEST(FitSarima, RecoversAr1)
{
    auto const y = synth_seasonal_ar(2024, 500, 50.0, 0.6, 0.0, 7, 1.0);
    auto const m = fit_sarima(y, orders(1, 0, 0, 0, 0, 0));
    ASSERT_EQ(m.ar_coeffs.size(), 1u);
    EXPECT_GE(m.ar_coeffs[0], 0.45);
    EXPECT_LE(m.ar_coeffs[0], 0.75);
    EXPECT_NEAR(m.intercept, 50.0, 1.0);
    EXPECT_GT(m.residual_variance, 0.5);
    EXPECT_LT(m.residual_variance, 1.5);
}

TEST(FitSarima, WhiteNoiseHasNoAr)
{
    auto const y = synth_seasonal_ar(77, 500, 10.0, 0.0, 0.0, 7, 2.0);
    auto const m = fit_sarima(y, orders(1, 0, 0, 0, 0, 0));
    EXPECT_LE(std::abs(m.ar_coeffs[0]), 0.15);
}

TEST(FitSarima, CoefficientCountsMatchOrders)
{
    auto const y = synth_seasonal_ar(5, 300, 20.0, 0.3, 0.4, 7, 1.0);
    auto const m = fit_sarima(y, orders(2, 0, 1, 1, 0, 1));
    EXPECT_EQ(m.ar_coeffs.size(), 2u);
    EXPECT_EQ(m.ma_coeffs.size(), 1u);
    EXPECT_EQ(m.seasonal_ar_coeffs.size(), 1u);
    EXPECT_EQ(m.seasonal_ma_coeffs.size(), 1u);
    EXPECT_GE(m.residual_variance, 0.0);
}

TEST(FitSarima, Deterministic)
{
    auto const y = synth_seasonal_ar(9, 200, 30.0, 0.5, 0.3, 7, 1.0);
    auto const a = fit_sarima(y, orders(1, 0, 0, 1, 0, 0));
    auto const b = fit_sarima(y, orders(1, 0, 0, 1, 0, 0));
    EXPECT_EQ(a.ar_coeffs, b.ar_coeffs);
    EXPECT_EQ(a.seasonal_ar_coeffs, b.seasonal_ar_coeffs);
    EXPECT_EQ(a.intercept, b.intercept);
    EXPECT_EQ(forecast_one(a), forecast_one(b));
}

TEST(FitSarima, SeasonalSineForecast)
{
    std::vector<double> y;
    for (int t = 0; t < 120; ++t) y.push_back(100.0 + 20.0 * std::sin(2.0 * std::numbers::pi * t / 7.0));
    double const next = 100.0 + 20.0 * std::sin(2.0 * std::numbers::pi * 120 / 7.0);
    auto const m = fit_sarima(y, orders(1, 0, 0, 1, 0, 0));
    EXPECT_NEAR(forecast_one(m), next, 0.1 * next);
}

TEST(FitSarima, NegativePredictionIsClamped)
{
    std::vector<double> y;
    for (int t = 0; t < 50; ++t) y.push_back(98.0 - 2.0 * t);  // ends at 0, falling by 2
    auto const m = fit_sarima(y, orders(0, 1, 0, 0, 0, 0));
    EXPECT_NEAR(m.intercept, -2.0, 1e-9);
    EXPECT_NEAR(m.predict_next(), -2.0, 1e-9);
    EXPECT_EQ(forecast_one(m), 0.0);
}

TEST(FitSarima, RollingObservationMatchesRefitTail)
{
    auto const y = synth_seasonal_ar(13, 300, 40.0, 0.5, 0.0, 7, 1.0);
    std::vector<double> head(y.begin(), y.end() - 1);
    auto const m = fit_sarima(head, orders(1, 0, 0, 0, 0, 0));
    auto const rolled = m.with_observation(y.back());
    double const expect = m.intercept + m.ar_coeffs[0] * (y.back() - m.intercept);
    EXPECT_NEAR(rolled.predict_next(), expect, 1e-9);
}

TEST(FitSarima, Errors)
{
    std::vector<double> const short_series(5, 1.0);
    EXPECT_THROW(fit_sarima(short_series, orders(1, 0, 0, 1, 0, 0)), ValidationError);
    std::vector<double> bad(60, 1.0);
    bad[10] = std::nan("");
    EXPECT_THROW(fit_sarima(bad, orders(1, 0, 0, 0, 0, 0)), ValidationError);
    EXPECT_THROW(fit_sarima(std::vector<double>(60, 1.0), orders(1, 0, 0, 0, 0, 0, 0)), InputError);
    EXPECT_THROW(SarimaModel{}.predict_next(), InputError);
}

TEST(FitSarima, WarnsOnExplosiveCoefficient)
{
    std::vector<double> y;
    double v = 1.0;
    for (int t = 0; t < 60; ++t) {
        y.push_back(v);
        v *= 1.05;
    }
    auto const m = fit_sarima(y, orders(1, 0, 0, 0, 0, 0));
    EXPECT_FALSE(m.warnings.empty());
}

TEST(SeasonalNaive, OneSeasonBack)
{
    std::vector<double> y;
    for (int i = 1; i <= 14; ++i) y.push_back(i);
    EXPECT_EQ(seasonal_naive(y, 7), 8.0);
    EXPECT_EQ(seasonal_naive(std::vector<double>(10, 3.5), 7), 3.5);
    EXPECT_EQ(seasonal_naive(std::vector<double>{5, 9}, 2), 5.0);
    EXPECT_THROW(seasonal_naive(std::vector<double>{5, 9}, 7), ValidationError);
}

} // namespace
