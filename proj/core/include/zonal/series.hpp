#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zonal/formal_series.hpp"
#include "zonal/kernel.hpp"

namespace zonal {

/// Sampling circle for Cauchy-integral coefficient extraction.
struct ExtractionConfig {
    double radius = 0.99;
    std::size_t sample_count = std::size_t{1} << 15;
    std::size_t max_order = 512;

    /// Throws ConfigError unless radius is in (0,1), sample_count is a power
    /// of two, max_order <= sample_count / 4, radius^-max_order <= 1e4
    /// (roundoff amplification) and radius^sample_count <= 1e-40 (aliasing).
    void validate() const;
};

/// Multiplier on sqrt(M) * ulp in the roundoff part of the error bound.
inline constexpr double kRoundoffConstant = 8.0;

/// Coefficients a_0..a_N of a Maclaurin expansion with per-order absolute
/// error estimates.
struct SeriesCoefficients {
    std::vector<double> coeffs;
    std::vector<double> error_bound;
    std::optional<ZonalKernel> kernel; // empty for ad-hoc functions
    std::string label;
    ExtractionConfig config;
    double max_abs_on_circle = 0.0;

    [[nodiscard]] std::size_t max_order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    [[nodiscard]] double max_error_bound() const;
};

/// a_n = (1 / (M r^n)) sum_m K(r w^m) w^{-nm}, w = exp(2 pi i / M), via the
/// radix-2 FFT. The error bound combines aliasing
/// max|K| r^(M-n) / (1 - r^M) with roundoff c sqrt(M) ulp max|K| r^-n.
/// Throws ConfigError for a bad config and NumericalHealthError if a
/// discarded imaginary part exceeds its bound.
[[nodiscard]] SeriesCoefficients cauchy_coefficients(const ZonalKernel& kernel, const ExtractionConfig& config = {});

/// Same extraction for an arbitrary function analytic on the closed disk of
/// the given radius and real on the real axis.
[[nodiscard]] SeriesCoefficients cauchy_coefficients(const std::function<complex(complex)>& f, std::string label,
                                                     const ExtractionConfig& config = {});

/// Copy with coefficients and error bounds multiplied by s > 0.
[[nodiscard]] SeriesCoefficients scaled(const SeriesCoefficients& series, double s);

/// 1/pi + z/2 + sum_{n>=1} (2n-3)!! / ((2n-1) n! 2^n pi) z^{2n}, (-1)!! = 1.
[[nodiscard]] FormalSeries kappa1_series_oracle(std::size_t order);

/// 1/2 + sum_n (2n)! / (4^n (n!)^2 (2n+1) pi) z^{2n+1} (arcsine series).
[[nodiscard]] FormalSeries kappa0_series_oracle(std::size_t order);

/// Exact expansion for Laplace, Gaussian, ExpPower, ArcCos0, ArcCos1 and
/// NTK with k = 1. Throws UnsupportedKernelError for anything else.
[[nodiscard]] FormalSeries closed_form_series(const ZonalKernel& kernel, std::size_t order);

/// sum_{n > N} n^{-3/2} by Euler-Maclaurin (error O(N^-11/2)).
[[nodiscard]] double tail_sum_three_halves(std::size_t n);

/// Partial sum of a series with n^{-3/2} increments plus its fitted tail.
struct PartialSumEstimate {
    double partial_sum = 0.0;
    double tail_constant = 0.0;        // A in increment ~ (A + B (-1)^n) n^{-3/2} + O(n^{-5/2})
    double alternating_constant = 0.0; // B
    double tail = 0.0;                 // fitted model summed over n > N
    double extrapolated = 0.0;  // partial_sum + tail
    std::size_t last_order = 0;
};

enum class Endpoint { kPlusOne, kMinusOne };

/// Sum of a_n (or (-1)^n a_n) up to max_order, plus a tail fitted by least
/// squares on the last `fit_window` orders (0 picks about max_order / 2).
/// Increments are modelled as smooth and parity-alternating parts at n^{-3/2}
/// and n^{-5/2}; the -1 singularity of NTKs shows up in the latter.
[[nodiscard]] PartialSumEstimate endpoint_sum(const SeriesCoefficients& series, Endpoint endpoint,
                                              std::size_t fit_window = 0);

} // namespace zonal
