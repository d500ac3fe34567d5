#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

namespace hgrid::detail {

struct NelderMeadOptions {
    int max_iterations = 2000;
    double f_tolerance = 1e-8;  // relative spread of simplex values
    double x_tolerance = 1e-6;  // absolute spread of simplex vertices
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free simplex minimisation (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Non-finite objective values are treated
/// as +infinity. `steps` gives the initial simplex edge per coordinate.
template <typename F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, std::vector<double> const& steps,
                             NelderMeadOptions const& opt = {})
{
    std::size_t const n = x0.size();
    auto eval = [&](std::vector<double> const& x) {
        double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += steps[i];
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    NelderMeadResult result;

    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            s2[i] = std::move(simplex[order[i]]);
            v2[i] = values[order[i]];
        }
        simplex = std::move(s2);
        values = std::move(v2);
    };

    auto converged = [&] {
        double const f_spread = values[n] - values[0];
        if (!(f_spread <= opt.f_tolerance * (1.0 + std::abs(values[0])))) {
            return false;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (std::abs(simplex[i][j] - simplex[0][j]) > opt.x_tolerance) {
                    return false;
                }
            }
        }
        return true;
    };

    auto affine = [&](double t, std::vector<double>& out) {
        // out = centroid + t * (centroid - worst)
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = centroid[j] + t * (centroid[j] - simplex[n][j]);
        }
    };

    int it = 0;
    sort_simplex();
    for (; it < opt.max_iterations; ++it) {
        if (converged()) {
            result.converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += simplex[i][j];
            }
        }
        for (auto& c : centroid) {
            c /= static_cast<double>(n);
        }

        affine(1.0, trial);
        double const fr = eval(trial);
        if (fr < values[0]) {
            affine(2.0, trial2);
            double const fe = eval(trial2);
            if (fe < fr) {
                simplex[n] = trial2;
                values[n] = fe;
            } else {
                simplex[n] = trial;
                values[n] = fr;
            }
        } else if (fr < values[n - 1]) {
            simplex[n] = trial;
            values[n] = fr;
        } else {
            bool const outside = fr < values[n];
            affine(outside ? 0.5 : -0.5, trial2);
            double const fc = eval(trial2);
            if (fc < (outside ? fr : values[n])) {
                simplex[n] = trial2;
                values[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    }
                    values[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
    }
    if (!result.converged && converged()) {
        result.converged = true;
    }
    result.x = simplex[0];
    result.value = values[0];
    result.iterations = it;
    return result;
}

} // namespace hgrid::detail
