#include "hgrid/sarima.hpp"

#include "hgrid/detail/nelder_mead.hpp"
#include "hgrid/error.hpp"

#include <cmath>
#include <fmt/format.h>

namespace hgrid {

namespace {

/// Product of two polynomials given as coefficient vectors in B.
std::vector<double> poly_mul(std::vector<double> const& a, std::vector<double> const& b)
{
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// 1 + sign * sum(coeffs[i] B^{(i+1) * stride})
std::vector<double> lag_poly(std::vector<double> const& coeffs, int stride, double sign)
{
    std::vector<double> out(coeffs.size() * static_cast<std::size_t>(stride) + 1, 0.0);
    out[0] = 1.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out[(i + 1) * static_cast<std::size_t>(stride)] = sign * coeffs[i];
    }
    return out;
}

std::vector<double> differencing_poly(SarimaOrders const& o)
{
    std::vector<double> poly{1.0};
    for (int i = 0; i < o.d; ++i) {
        poly = poly_mul(poly, {1.0, -1.0});
    }
    std::vector<double> seasonal(static_cast<std::size_t>(o.s) + 1, 0.0);
    seasonal.front() = 1.0;
    seasonal.back() = -1.0;
    for (int i = 0; i < o.D; ++i) {
        poly = poly_mul(poly, seasonal);
    }
    return poly;
}

/// Lag coefficients (dropping the leading 1) of an AR or MA operator, in the
/// convention x_t = sum ar[k] x_{t-1-k} + e_t + sum ma[k] e_{t-1-k}.
std::vector<double> expanded_lags(std::vector<double> const& nonseasonal,
                                  std::vector<double> const& seasonal,
                                  int s,
                                  double sign)
{
    auto poly = poly_mul(lag_poly(nonseasonal, 1, sign), lag_poly(seasonal, s, sign));
    std::vector<double> out(poly.begin() + 1, poly.end());
    for (auto& c : out) {
        c *= sign;
    }
    return out;
}

struct Layout {
    std::size_t p, q, P, Q;
    std::size_t size() const { return p + q + P + Q + 1; }
};

void unpack(std::vector<double> const& theta, Layout const& L, SarimaModel& m)
{
    auto it = theta.begin();
    m.ar_coeffs.assign(it, it + static_cast<std::ptrdiff_t>(L.p));
    it += static_cast<std::ptrdiff_t>(L.p);
    m.ma_coeffs.assign(it, it + static_cast<std::ptrdiff_t>(L.q));
    it += static_cast<std::ptrdiff_t>(L.q);
    m.seasonal_ar_coeffs.assign(it, it + static_cast<std::ptrdiff_t>(L.P));
    it += static_cast<std::ptrdiff_t>(L.P);
    m.seasonal_ma_coeffs.assign(it, it + static_cast<std::ptrdiff_t>(L.Q));
}

/// Residual recursion; residuals before the first full AR window are zero.
double conditional_residuals(std::vector<double> const& x,
                             std::vector<double> const& ar,
                             std::vector<double> const& ma,
                             std::vector<double>* residuals)
{
    std::size_t const n = x.size();
    std::size_t const start = ar.size();
    std::vector<double> e(n, 0.0);
    double css = 0.0;
    for (std::size_t t = start; t < n; ++t) {
        double pred = 0.0;
        for (std::size_t k = 0; k < ar.size(); ++k) {
            pred += ar[k] * x[t - 1 - k];
        }
        for (std::size_t k = 0; k < ma.size() && k < t; ++k) {
            pred += ma[k] * e[t - 1 - k];
        }
        e[t] = x[t] - pred;
        css += e[t] * e[t];
    }
    if (residuals) {
        *residuals = std::move(e);
    }
    return css;
}

template <typename T>
void keep_tail(std::vector<T>& v, std::size_t n)
{
    if (v.size() > n) {
        v.erase(v.begin(), v.end() - static_cast<std::ptrdiff_t>(n));
    }
}

} // namespace

std::vector<std::string> order_problems(SarimaOrders const& o)
{
    std::vector<std::string> out;
    if (o.p < 0 || o.d < 0 || o.q < 0 || o.P < 0 || o.D < 0 || o.Q < 0) {
        out.push_back("SARIMA orders must be non-negative");
    }
    if (o.s < 2) {
        out.push_back(fmt::format("seasonal period must be >= 2 (got {})", o.s));
    }
    if (o.d + o.D > 2) {
        out.push_back(fmt::format("total differencing d + D must be <= 2 (got {})", o.d + o.D));
    }
    return out;
}

std::size_t min_fit_length(SarimaOrders const& o)
{
    return static_cast<std::size_t>(3 * o.s + o.p + o.q + 10);
}

SarimaModel fit_sarima(std::span<double const> series, SarimaOrders const& orders)
{
    if (auto problems = order_problems(orders); !problems.empty()) {
        throw InputError(problems.front());
    }
    std::size_t const need = min_fit_length(orders);
    if (series.size() < need) {
        throw ValidationError(
            fmt::format("series too short for SARIMA fit: {} points, need at least {}", series.size(), need));
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!std::isfinite(series[i])) {
            throw ValidationError(fmt::format("non-finite value at position {}", i));
        }
    }

    SarimaModel m;
    m.orders = orders;
    m.diff_poly_ = differencing_poly(orders);
    std::size_t const lag_d = m.diff_poly_.size() - 1;

    std::vector<double> w;
    w.reserve(series.size() - lag_d);
    for (std::size_t t = lag_d; t < series.size(); ++t) {
        double v = 0.0;
        for (std::size_t k = 0; k <= lag_d; ++k) {
            v += m.diff_poly_[k] * series[t - k];
        }
        w.push_back(v);
    }

    std::size_t const ar_lags = static_cast<std::size_t>(orders.p + orders.s * orders.P);
    Layout const layout{static_cast<std::size_t>(orders.p), static_cast<std::size_t>(orders.q),
                        static_cast<std::size_t>(orders.P), static_cast<std::size_t>(orders.Q)};
    if (w.size() < ar_lags + layout.size() + 1) {
        throw ValidationError("series too short after differencing for the requested orders");
    }

    // Optimise on the standardised series for scale-free simplex steps.
    double mean = 0.0;
    for (double v : w) {
        mean += v;
    }
    mean /= static_cast<double>(w.size());
    double var = 0.0;
    for (double v : w) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(w.size());
    double const scale = var > 0.0 ? std::sqrt(var) : 1.0;
    std::vector<double> z(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        z[i] = (w[i] - mean) / scale;
    }

    SarimaModel scratch;
    std::vector<double> x(z.size());
    auto objective = [&](std::vector<double> const& theta) {
        unpack(theta, layout, scratch);
        double const mu = theta.back();
        for (std::size_t i = 0; i < z.size(); ++i) {
            x[i] = z[i] - mu;
        }
        auto ar = expanded_lags(scratch.ar_coeffs, scratch.seasonal_ar_coeffs, orders.s, -1.0);
        auto ma = expanded_lags(scratch.ma_coeffs, scratch.seasonal_ma_coeffs, orders.s, 1.0);
        return conditional_residuals(x, ar, ma, nullptr);
    };

    std::vector<double> theta0(layout.size(), 0.0);
    std::vector<double> steps(layout.size(), 0.1);
    auto const best = detail::nelder_mead(objective, theta0, steps);

    unpack(best.x, layout, m);
    m.intercept = mean + scale * best.x.back();
    m.converged = best.converged;
    m.iterations = best.iterations;
    m.ar_poly_ = expanded_lags(m.ar_coeffs, m.seasonal_ar_coeffs, orders.s, -1.0);
    m.ma_poly_ = expanded_lags(m.ma_coeffs, m.seasonal_ma_coeffs, orders.s, 1.0);

    std::vector<double> xs(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        xs[i] = w[i] - m.intercept;
    }
    std::vector<double> residuals;
    double const css = conditional_residuals(xs, m.ar_poly_, m.ma_poly_, &residuals);
    m.residual_variance = css / static_cast<double>(w.size() - ar_lags);

    if (!m.converged) {
        m.warnings.push_back(fmt::format("optimizer stopped after {} iterations without converging", m.iterations));
    }
    auto flag = [&](std::vector<double> const& coeffs, char const* name) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (std::abs(coeffs[i]) >= 1.0) {
                m.warnings.push_back(fmt::format("|{}[{}]| = {:.4f} >= 1; model may be non-stationary or non-invertible",
                                                 name, i, std::abs(coeffs[i])));
            }
        }
    };
    flag(m.ar_coeffs, "ar");
    flag(m.ma_coeffs, "ma");
    flag(m.seasonal_ar_coeffs, "seasonal_ar");
    flag(m.seasonal_ma_coeffs, "seasonal_ma");

    m.y_tail_.assign(series.begin(), series.end());
    m.x_tail_ = std::move(xs);
    m.e_tail_ = std::move(residuals);
    keep_tail(m.y_tail_, lag_d);
    keep_tail(m.x_tail_, m.ar_poly_.size());
    keep_tail(m.e_tail_, m.ma_poly_.size());
    m.fitted_ = true;
    return m;
}

double SarimaModel::predict_next() const
{
    if (!fitted_) {
        throw InputError("SARIMA model has not been fitted");
    }
    double x_hat = 0.0;
    for (std::size_t k = 0; k < ar_poly_.size(); ++k) {
        x_hat += ar_poly_[k] * x_tail_[x_tail_.size() - 1 - k];
    }
    for (std::size_t k = 0; k < ma_poly_.size(); ++k) {
        x_hat += ma_poly_[k] * e_tail_[e_tail_.size() - 1 - k];
    }
    double y_hat = intercept + x_hat;
    for (std::size_t k = 1; k < diff_poly_.size(); ++k) {
        y_hat -= diff_poly_[k] * y_tail_[y_tail_.size() - k];
    }
    return y_hat;
}

void SarimaModel::push(double observation)
{
    double const predicted = predict_next();
    double w = observation;
    for (std::size_t k = 1; k < diff_poly_.size(); ++k) {
        w += diff_poly_[k] * y_tail_[y_tail_.size() - k];
    }
    double const x = w - intercept;
    double const e = observation - predicted;

    y_tail_.push_back(observation);
    x_tail_.push_back(x);
    e_tail_.push_back(e);
    keep_tail(y_tail_, diff_poly_.size() - 1);
    keep_tail(x_tail_, ar_poly_.size());
    keep_tail(e_tail_, ma_poly_.size());
}

SarimaModel SarimaModel::with_observation(double observation) const
{
    if (!std::isfinite(observation)) {
        throw InputError("observation must be finite");
    }
    SarimaModel next = *this;
    next.push(observation);
    return next;
}

double forecast_one(SarimaModel const& model)
{
    return std::max(0.0, model.predict_next());
}

double seasonal_naive(std::span<double const> series, int s)
{
    if (s < 1) {
        throw InputError(fmt::format("season length must be >= 1 (got {})", s));
    }
    if (series.size() < static_cast<std::size_t>(s)) {
        throw ValidationError(fmt::format("series of {} points is shorter than season {}", series.size(), s));
    }
    return series[series.size() - static_cast<std::size_t>(s)];
}

} // namespace hgrid
