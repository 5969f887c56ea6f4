#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace zonal {

/// Gamma function for real arguments; throws DomainError at 0, -1, -2, ...
[[nodiscard]] double gamma_real(double x);

enum class DensityMethod { kSeries, kClosedFormHalf };

[[nodiscard]] const char* to_string(DensityMethod method);

/// One value of f(t) = L^{-1}{exp(-s^a)}(t) (or its sigma-scaled variant).
struct DensityEvaluation {
    double t = 0.0;
    double value = 0.0;
    DensityMethod method = DensityMethod::kSeries;
    double cancellation_ratio = 0.0; // max |term| / |result|
};

/// Largest accepted cancellation ratio before LossOfPrecisionError.
inline constexpr double kMaxCancellationRatio = 1e12;

/// f(t) = (1/pi) sum_{k>=1} (-1)^{k+1} Gamma(ak + 1) sin(pi a k) / (k! t^{ak+1})
/// for 0 < a < 1, t > 0, and f(0) = 0.
///
/// Summation stops once the term envelope Gamma(ak+1) / (k! t^{ak+1}) is
/// decreasing and below 1e-17 |partial sum|. Throws LossOfPrecisionError when
/// the cancellation ratio exceeds 1e12 (small t), NonconvergenceError after
/// 10^6 terms, and ParameterError for a outside (0, 1) or t < 0.
[[nodiscard]] DensityEvaluation density_series(double a, double t);

/// Closed form t^{-3/2} exp(-1/(4t)) / (2 sqrt(pi)) of the a = 1/2 density.
[[nodiscard]] DensityEvaluation density_half_closed_form(double t);

/// L^{-1}{exp(-s^a / sigma)}(t) = sigma^{1/a} f(t sigma^{1/a}).
[[nodiscard]] DensityEvaluation density_scaled(double a, double sigma, double t);

/// C in L^{-1}{exp(-s^a / sigma)}(t) ~ C t^{-a-1}: 1 / (sigma (-Gamma(-a))).
[[nodiscard]] double tail_constant(double a, double sigma);

/// Log-spaced evaluation grid for certificates.
struct DensityGrid {
    double t_min = 0.1;
    double t_max = 1e4;
    std::size_t points = 241;

    [[nodiscard]] std::vector<double> nodes() const;
};

/// Finite-range witness that c^2 g1 - g2 >= 0, where
/// g_i = L^{-1}{exp(-x^{gamma_i/2} / sigma_i)}.
struct CMCertificate {
    double gamma1 = 0.0, sigma1 = 0.0, gamma2 = 0.0, sigma2 = 0.0;
    double c_squared = 0.0;
    double max_ratio = 0.0;
    std::vector<double> grid; // points that passed the cancellation guard
    double min_difference = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t dropped_points = 0;
    bool ratio_grows_toward_t_min = false;
    bool tail_ok = false;
    bool success = false;
    std::vector<std::string> notes;
};

/// Certificate for 0 < gamma1 < gamma2 < 2 (ParameterError otherwise).
/// c^2 = 1.05 * max over the guarded grid of g2 / g1. tail_ok holds when
/// gamma1 < gamma2 and the asymptote c^2 C1 t^{-a1-1} already exceeds
/// C2 t^{-a2-1} at the largest guarded point, after which the gap only widens.
/// Throws GuardError if fewer than 32 grid points survive the guard.
[[nodiscard]] CMCertificate cm_certificate(double gamma1, double sigma1, double gamma2, double sigma2,
                                           const DensityGrid& grid = {});

/// The comparison behind cm_certificate without the strict ordering
/// precondition (gamma1 <= gamma2 allowed), used for reflexive sanity checks.
[[nodiscard]] CMCertificate density_domination(double gamma1, double sigma1, double gamma2, double sigma2,
                                               const DensityGrid& grid = {});

} // namespace zonal
