#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zonal/asymptotics.hpp"
#include "zonal/kernel.hpp"
#include "zonal/series.hpp"

namespace zonal {

/// Positive definiteness on every sphere <=> nonnegative Maclaurin
/// coefficients with a finite sum.
struct SchoenbergReport {
    std::string label;
    std::optional<ZonalKernel> kernel;
    double min_coefficient = 0.0;
    std::size_t min_order = 0;
    double sum_estimate = 0.0;
    bool nonnegative = false;
    bool tail_rate_ok = false;
    bool pass = false;
};

/// pass iff every a_n >= -error_bound[n] and the increments keep the n^{-3/2}
/// rate (|a_n| n^{3/2} over the last quarter stays within 1.5x its maximum
/// over the preceding quarter, up to noise). A failing check is a result.
[[nodiscard]] SchoenbergReport schoenberg_check(const SeriesCoefficients& series);

enum class Indeterminacy {
    kError,                 // throw IndeterminateError
    kRecordStructuralZeros, // record; accept orders whose parity limit vanishes
};

/// Finite-order witness that gamma^2 * dominating - dominated has
/// nonnegative coefficients, i.e. H_dominated is contained in H_dominating.
struct InclusionCertificate {
    double gamma_squared = 0.0;
    std::size_t checked_order = 0;
    double min_margin = 0.0; // min over determinate n of gamma^2 a_n - b_n
    std::optional<double> asymptotic_ratio;
    std::string dominated;
    std::string dominating;
    std::size_t usable_orders = 0;
    std::size_t masked_orders = 0; // both coefficients at noise level
    std::vector<std::size_t> indeterminate_orders;
    bool success = false;
    std::vector<std::string> notes;
};

/// Noise threshold for coefficient n of a series: 10 * error_bound[n].
[[nodiscard]] double noise_level(const SeriesCoefficients& series, std::size_t n);

/// gamma^2 = 1.01 * max b_n / a_n over orders with a_n above noise.
///
/// Orders where both coefficients are at noise level are treated as
/// satisfied. An order with b_n above noise and a_n at noise is indeterminate:
/// with Indeterminacy::kError it throws IndeterminateError, otherwise it is
/// recorded and accepted only if the dominating kernel's predicted limit for
/// that parity is zero. `predictions` is (dominated, dominating); when given,
/// the asymptotic ratio of limits must be finite for success.
[[nodiscard]] InclusionCertificate domination_certificate(
    const SeriesCoefficients& dominated, const SeriesCoefficients& dominating,
    const std::optional<std::pair<AsymptoticPrediction, AsymptoticPrediction>>& predictions = std::nullopt,
    Indeterminacy policy = Indeterminacy::kError);

struct Theorem1Report {
    InclusionCertificate ntk_in_laplace; // NTK dominated by Laplace
    InclusionCertificate laplace_in_ntk; // Laplace dominated by NTK
    [[nodiscard]] bool both_succeed() const { return ntk_in_laplace.success && laplace_in_ntk.success; }
};

/// Both domination directions between NTK(k, beta) and Laplace(c_tilde).
[[nodiscard]] Theorem1Report theorem1_report(int k, double beta, double c_tilde, const ExtractionConfig& config = {});

} // namespace zonal
