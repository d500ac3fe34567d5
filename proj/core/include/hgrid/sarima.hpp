#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hgrid {

/// (p, d, q)(P, D, Q)_s
struct SarimaOrders {
    int p = 1;
    int d = 0;
    int q = 0;
    int P = 1;
    int D = 0;
    int Q = 0;
    int s = 7;

    bool operator==(SarimaOrders const&) const = default;
};

/// Violated order constraints; empty when valid.
std::vector<std::string> order_problems(SarimaOrders const& orders);

/// Shortest series fit_sarima accepts: 3s + p + q + 10.
std::size_t min_fit_length(SarimaOrders const& orders);

/// A fitted seasonal ARIMA model together with the tail of the series it was
/// fitted on, which is all one-step prediction needs.
class SarimaModel {
public:
    SarimaOrders orders;
    std::vector<double> ar_coeffs;
    std::vector<double> ma_coeffs;
    std::vector<double> seasonal_ar_coeffs;
    std::vector<double> seasonal_ma_coeffs;
    double intercept = 0.0;  // mean of the differenced series
    double residual_variance = 0.0;
    bool converged = false;  // false: coefficients are the optimizer's best-so-far
    int iterations = 0;
    std::vector<std::string> warnings;

    bool fitted() const noexcept { return fitted_; }

    /// Unclamped one-step-ahead prediction.
    double predict_next() const;

    /// Copy of this model that has also seen `observation`; coefficients are
    /// kept, only the history tail moves forward.
    [[nodiscard]] SarimaModel with_observation(double observation) const;

private:
    friend SarimaModel fit_sarima(std::span<double const> series, SarimaOrders const& orders);

    void push(double observation);

    bool fitted_ = false;
    std::vector<double> diff_poly_;  // differencing polynomial, [0] == 1
    std::vector<double> ar_poly_;    // expanded AR lags, index k -> lag k+1
    std::vector<double> ma_poly_;    // expanded MA lags
    std::vector<double> y_tail_;     // most recent raw values, newest last
    std::vector<double> x_tail_;     // demeaned differenced values
    std::vector<double> e_tail_;     // residuals
};

/// Conditional-sum-of-squares fit on the differenced series, minimised with
/// Nelder-Mead (2000 iterations, tolerance 1e-8) from zero coefficients and
/// the differenced-series mean. Throws ValidationError for short or
/// non-finite input and InputError for invalid orders. Deterministic.
SarimaModel fit_sarima(std::span<double const> series, SarimaOrders const& orders);

/// One-step-ahead load forecast, clamped at 0. Throws InputError for an
/// unfitted model.
double forecast_one(SarimaModel const& model);

/// The value one season back: series[size - s]. Throws ValidationError when
/// the series is shorter than the season.
double seasonal_naive(std::span<double const> series, int s);

} // namespace hgrid
