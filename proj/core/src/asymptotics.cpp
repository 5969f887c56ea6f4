#include "zonal/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "zonal/errors.hpp"
#include "zonal/stable_density.hpp"

namespace zonal {

namespace {

constexpr double kPi = std::numbers::pi;

double kappa0_real(double u) { return (kPi - std::acos(u)) / kPi; }

} // namespace

AsymptoticPrediction predicted_ratio(const ZonalKernel& kernel) {
    validate(kernel);
    AsymptoticPrediction p;
    p.kernel = kernel;
    if (const auto* lap = std::get_if<Laplace>(&kernel)) {
        p.even_limit = p.odd_limit = lap->c_tilde() / (2.0 * std::sqrt(kPi));
        return p;
    }
    if (const auto* ntk = std::get_if<Ntk>(&kernel)) {
        const double b2 = ntk->beta * ntk->beta;
        const double k = ntk->k;
        const double scale = std::numbers::sqrt2 * std::pow(kPi, 1.5);
        const double from_plus_one = (b2 + 1.0) * k * (k + 1.0) / (2.0 * scale);
        double product = 1.0;
        for (int j = 1; j <= ntk->k - 1; ++j) product *= kappa0_real(iterate_minus_one(j));
        const double from_minus_one = (1.0 - b2) / scale * product;
        p.even_limit = from_plus_one + from_minus_one;
        p.odd_limit = from_plus_one - from_minus_one;
        return p;
    }
    throw UnsupportedKernelError("predicted_ratio: no n^-3/2 limit for " + describe(kernel));
}

PowerLawPrediction predicted_exp_ratio(double gamma, double sigma) {
    if (!(gamma > 0.0 && gamma < 2.0)) throw ParameterError("predicted_exp_ratio: gamma must lie in (0, 2)");
    if (!(sigma > 0.0)) throw ParameterError("predicted_exp_ratio: sigma must be positive");
    const double c = std::pow(2.0, gamma / 2.0) / sigma;
    return {-gamma / 2.0 - 1.0, c / -gamma_real(-gamma / 2.0)};
}

AsymptoticPrediction predicted_decay(const ZonalKernel& kernel) {
    if (const auto* e = std::get_if<ExpPower>(&kernel)) {
        validate(kernel);
        const auto law = predicted_exp_ratio(e->gamma, e->sigma);
        return {law.constant, law.constant, law.exponent, kernel};
    }
    return predicted_ratio(kernel);
}

RatioDiagnostics ratio_diagnostics(const SeriesCoefficients& series) {
    const std::size_t n_max = series.max_order();
    if (n_max < 64) throw DegenerateInputError("ratio_diagnostics: max_order must be at least 64");

    RatioDiagnostics d;
    d.ratios.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        d.ratios.push_back({n, series.coeffs[n] * std::pow(static_cast<double>(n), 1.5)});
    }

    double even_sum = 0.0, odd_sum = 0.0;
    std::size_t even_count = 0, odd_count = 0;
    for (std::size_t n = (3 * n_max) / 4; n <= n_max; ++n) {
        const double r = d.ratios[n - 1].ratio;
        if (n % 2 == 0) {
            even_sum += r;
            ++even_count;
        } else {
            odd_sum += r;
            ++odd_count;
        }
    }
    d.even_tail_mean = even_sum / static_cast<double>(even_count);
    d.odd_tail_mean = odd_sum / static_cast<double>(odd_count);

    // Ordinary least squares of log|a_n| on log n.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t count = 0;
    const std::size_t first = n_max / 2 + (n_max / 2) % 2;
    for (std::size_t n = first; n <= n_max; n += 2) {
        const double a = std::abs(series.coeffs[n]);
        if (!(a > 10.0 * series.error_bound[n])) continue;
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(a);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 8) throw DegenerateInputError("ratio_diagnostics: fewer than 8 resolvable coefficients for the fit");
    const double cnt = static_cast<double>(count);
    d.exponent_estimate = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    d.fit_points = count;
    return d;
}

} // namespace zonal
