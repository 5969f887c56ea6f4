#pragma once

#include <cstddef>
#include <vector>

#include "zonal/kernel.hpp"
#include "zonal/series.hpp"

namespace zonal {

/// Limits of [z^n]K(z) / n^exponent along even and odd n.
///
/// For the Laplace kernel and the NTKs the exponent is -3/2. Exponential
/// power kernels use exponent -gamma/2 - 1 with equal parity limits.
struct AsymptoticPrediction {
    double even_limit = 0.0;
    double odd_limit = 0.0;
    double exponent = -1.5;
    ZonalKernel kernel;

    [[nodiscard]] double limit_for(std::size_t n) const { return n % 2 == 0 ? even_limit : odd_limit; }
};

/// Laplace: c_tilde / (2 sqrt(pi)) for both parities.
/// NTK(k, beta): (beta^2 + 1) k (k + 1) / (2 sqrt(2) pi^{3/2}) +/- P, with
/// P = (1 - beta^2) / (sqrt(2) pi^{3/2}) prod_{j=1}^{k-1} kappa0(a_j) coming
/// from the singularity at z = -1 (plus on even n, minus on odd n).
/// Throws UnsupportedKernelError for every other kernel.
[[nodiscard]] AsymptoticPrediction predicted_ratio(const ZonalKernel& kernel);

struct PowerLawPrediction {
    double exponent = 0.0;
    double constant = 0.0;
};

/// [z^n] exp(-c (1 - z)^{gamma/2}) ~ c n^{-gamma/2 - 1} / (-Gamma(-gamma/2)),
/// c = 2^{gamma/2} / sigma.
[[nodiscard]] PowerLawPrediction predicted_exp_ratio(double gamma, double sigma);

/// predicted_ratio for Laplace/NTK, predicted_exp_ratio (as equal parity
/// limits) for ExpPower.
[[nodiscard]] AsymptoticPrediction predicted_decay(const ZonalKernel& kernel);

struct RatioPoint {
    std::size_t n = 0;
    double ratio = 0.0;
};

struct RatioDiagnostics {
    std::vector<RatioPoint> ratios; // n = 1..max_order, ratio = a_n n^{3/2}
    double even_tail_mean = 0.0;
    double odd_tail_mean = 0.0;
    double exponent_estimate = 0.0;
    std::size_t fit_points = 0;
};

/// Ratios a_n / n^{-3/2}, parity-split means over the last quarter of orders,
/// and the least-squares slope of log|a_n| against log n over the last half of
/// the even orders, skipping coefficients below 10 * error_bound.
/// Throws DegenerateInputError if max_order < 64 or fewer than 8 points
/// remain for the fit.
[[nodiscard]] RatioDiagnostics ratio_diagnostics(const SeriesCoefficients& series);

} // namespace zonal
