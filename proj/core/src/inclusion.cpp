#include "zonal/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

constexpr double kGammaSafety = 1.01;

std::string limit_parity(std::size_t n) { return n % 2 == 0 ? "even" : "odd"; }

bool limit_vanishes(const AsymptoticPrediction& p, std::size_t parity) {
    const double scale = std::max(std::abs(p.even_limit), std::abs(p.odd_limit));
    return std::abs(p.limit_for(parity)) <= 1e-14 * std::max(scale, 1.0);
}

} // namespace

double noise_level(const SeriesCoefficients& series, std::size_t n) { return 10.0 * series.error_bound[n]; }

SchoenbergReport schoenberg_check(const SeriesCoefficients& series) {
    SchoenbergReport r;
    r.label = series.label;
    r.kernel = series.kernel;
    const std::size_t n_max = series.max_order();

    r.nonnegative = true;
    r.min_coefficient = series.coeffs[0];
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (series.coeffs[n] < r.min_coefficient) {
            r.min_coefficient = series.coeffs[n];
            r.min_order = n;
        }
        if (series.coeffs[n] < -series.error_bound[n]) r.nonnegative = false;
    }

    auto scaled_max = [&](std::size_t lo, std::size_t hi) {
        double m = 0.0;
        for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
            m = std::max(m, std::abs(series.coeffs[n]) * std::pow(static_cast<double>(n), 1.5));
        }
        return m;
    };
    const double noise = 10.0 * series.max_error_bound() * std::pow(static_cast<double>(n_max), 1.5);
    const double previous = scaled_max(n_max / 2 + 1, (3 * n_max) / 4);
    const double last = scaled_max((3 * n_max) / 4 + 1, n_max);
    r.tail_rate_ok = last <= 1.5 * previous + noise;

    if (n_max >= 16) {
        r.sum_estimate = endpoint_sum(series, Endpoint::kPlusOne).extrapolated;
    } else {
        for (double c : series.coeffs) r.sum_estimate += c;
    }
    r.pass = r.nonnegative && r.tail_rate_ok;
    return r;
}

InclusionCertificate domination_certificate(
    const SeriesCoefficients& dominated, const SeriesCoefficients& dominating,
    const std::optional<std::pair<AsymptoticPrediction, AsymptoticPrediction>>& predictions, Indeterminacy policy) {
    if (dominated.max_order() != dominating.max_order()) {
        throw ParameterError("domination_certificate: series must share max_order");
    }
    const std::size_t n_max = dominated.max_order();

    InclusionCertificate cert;
    cert.dominated = dominated.label;
    cert.dominating = dominating.label;
    cert.checked_order = n_max;

    double max_ratio = -std::numeric_limits<double>::infinity();
    std::vector<bool> determinate(n_max + 1, true);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double a = dominating.coeffs[n];
        const double b = dominated.coeffs[n];
        if (a > noise_level(dominating, n)) {
            ++cert.usable_orders;
            max_ratio = std::max(max_ratio, b / a);
        } else if (b > noise_level(dominated, n)) {
            if (policy == Indeterminacy::kError) {
                std::ostringstream os;
                os << "domination_certificate: order " << n << " of " << dominated.label << " is " << b
                   << " while " << dominating.label << " is at noise level " << a;
                throw IndeterminateError(os.str());
            }
            cert.indeterminate_orders.push_back(n);
            determinate[n] = false;
        } else {
            ++cert.masked_orders;
        }
    }
    if (cert.usable_orders == 0) throw DegenerateInputError("domination_certificate: dominating series is all noise");

    cert.gamma_squared = kGammaSafety * std::max(max_ratio, std::numeric_limits<double>::min());

    bool finite_ok = true;
    cert.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!determinate[n]) continue;
        const double margin = cert.gamma_squared * dominating.coeffs[n] - dominated.coeffs[n];
        cert.min_margin = std::min(cert.min_margin, margin);
        const double tolerance = cert.gamma_squared * noise_level(dominating, n) + noise_level(dominated, n);
        if (margin < -tolerance) finite_ok = false;
    }

    bool indeterminacy_explained = true;
    if (!cert.indeterminate_orders.empty()) {
        bool parity_seen[2] = {false, false};
        for (std::size_t n : cert.indeterminate_orders) {
            const bool structural = predictions && limit_vanishes(predictions->second, n);
            if (!structural) indeterminacy_explained = false;
            parity_seen[n % 2] = true;
        }
        std::ostringstream os;
        os << cert.indeterminate_orders.size() << " indeterminate orders (dominated coefficient resolvable, "
           << "dominating coefficient at noise level), first at n = " << cert.indeterminate_orders.front();
        cert.notes.push_back(os.str());
        for (std::size_t parity = 0; parity < 2; ++parity) {
            if (!parity_seen[parity]) continue;
            if (predictions && limit_vanishes(predictions->second, parity)) {
                cert.notes.push_back("the dominating kernel's " + limit_parity(parity) +
                                     "-order coefficients vanish structurally (zero asymptotic limit); domination "
                                     "cannot be established from coefficients at those orders");
            } else {
                cert.notes.push_back("unexplained indeterminate " + limit_parity(parity) +
                                     " orders: the dominated kernel is not bounded by the dominating one");
            }
        }
    }

    if (predictions) {
        const auto& [pb, pa] = *predictions;
        double ratio = 0.0;
        if (std::abs(pb.exponent - pa.exponent) > 1e-12) {
            ratio = pb.exponent > pa.exponent ? std::numeric_limits<double>::infinity() : 0.0;
        } else {
            for (std::size_t parity = 0; parity < 2; ++parity) {
                const double lb = pb.limit_for(parity);
                const double la = pa.limit_for(parity);
                if (!limit_vanishes(pa, parity)) {
                    ratio = std::max(ratio, lb / la);
                } else if (!limit_vanishes(pb, parity)) {
                    if (policy == Indeterminacy::kError) {
                        ratio = std::numeric_limits<double>::infinity();
                    } else {
                        cert.notes.push_back("asymptotic ratio excludes " + limit_parity(parity) +
                                             " orders, where the dominating limit is zero");
                    }
                }
            }
        }
        cert.asymptotic_ratio = ratio;
        if (std::isfinite(ratio) && ratio > cert.gamma_squared) {
            std::ostringstream os;
            os << "asymptotic ratio " << ratio << " exceeds the finite-order gamma^2 " << cert.gamma_squared
               << "; orders beyond " << n_max << " need a larger gamma^2";
            cert.notes.push_back(os.str());
        }
    }

    const bool asymptotic_ok = !cert.asymptotic_ratio || std::isfinite(*cert.asymptotic_ratio);
    if (!asymptotic_ok) cert.notes.emplace_back("asymptotic ratio of limits is unbounded");
    cert.success = finite_ok && indeterminacy_explained && asymptotic_ok && std::isfinite(cert.gamma_squared);
    cert.notes.emplace_back("finite-order numerical certificate plus asymptotic corroboration; not a proof");
    return cert;
}

Theorem1Report theorem1_report(int k, double beta, double c_tilde, const ExtractionConfig& config) {
    const ZonalKernel ntk = Ntk{k, beta};
    const ZonalKernel laplace = Laplace::with_c_tilde(c_tilde);
    validate(ntk);
    validate(laplace);

    const auto ntk_series = cauchy_coefficients(ntk, config);
    const auto laplace_series = cauchy_coefficients(laplace, config);
    const auto ntk_pred = predicted_ratio(ntk);
    const auto laplace_pred = predicted_ratio(laplace);

    Theorem1Report report;
    report.ntk_in_laplace = domination_certificate(ntk_series, laplace_series, std::pair{ntk_pred, laplace_pred},
                                                   Indeterminacy::kRecordStructuralZeros);
    report.ntk_in_laplace.notes.emplace_back(
        "H_NTK is contained in H_Laplace: the direction established by coefficient domination");

    report.laplace_in_ntk = domination_certificate(laplace_series, ntk_series, std::pair{laplace_pred, ntk_pred},
                                                   Indeterminacy::kRecordStructuralZeros);
    report.laplace_in_ntk.notes.emplace_back(
        "H_Laplace is contained in H_NTK: this direction rests on a previously published result; the finite check "
        "only corroborates it");
    return report;
}

} // namespace zonal
