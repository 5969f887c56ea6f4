#include "zonal/stable_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxTerms = 1'000'000;
constexpr double kSafetyFactor = 1.05;
constexpr std::size_t kMinGuardedPoints = 32;

// sin(pi x), exactly zero at integers.
double sin_pi(double x) {
    double r = x - 2.0 * std::round(x / 2.0); // [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

void require_exponent(double a) {
    if (!(a > 0.0 && a < 1.0)) throw ParameterError("density: exponent a must lie in (0, 1)");
}

} // namespace

double gamma_real(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma_real: argument must be finite");
    if (x <= 0.0 && x == std::floor(x)) {
        std::ostringstream os;
        os << "gamma_real: pole at " << x;
        throw DomainError(os.str());
    }
    return std::tgamma(x);
}

const char* to_string(DensityMethod method) {
    switch (method) {
    case DensityMethod::kSeries: return "series";
    case DensityMethod::kClosedFormHalf: return "closed_form_half";
    }
    return "unknown";
}

DensityEvaluation density_series(double a, double t) {
    require_exponent(a);
    if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("density_series: t must be finite and nonnegative");
    DensityEvaluation out;
    out.t = t;
    if (t == 0.0) return out;

    const double log_t = std::log(t);
    double sum = 0.0;
    double max_term = 0.0;
    double previous_envelope = std::numeric_limits<double>::infinity();
    std::size_t k = 1;
    for (;; ++k) {
        if (k > kMaxTerms) throw NonconvergenceError("density_series: no convergence within 10^6 terms");
        const double kd = static_cast<double>(k);
        const double log_envelope = std::lgamma(a * kd + 1.0) - std::lgamma(kd + 1.0) - (a * kd + 1.0) * log_t;
        if (log_envelope > 700.0) {
            std::ostringstream os;
            os << "density_series: terms overflow at a = " << a << ", t = " << t;
            throw LossOfPrecisionError(os.str());
        }
        const double envelope = std::exp(log_envelope);
        const double term = ((k % 2 == 1) ? 1.0 : -1.0) * sin_pi(a * kd) * envelope;
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        if (envelope < previous_envelope && envelope < 1e-17 * std::abs(sum)) break;
        previous_envelope = envelope;
    }

    out.value = sum / kPi;
    out.cancellation_ratio = (sum == 0.0) ? std::numeric_limits<double>::infinity() : max_term / std::abs(sum);
    if (out.cancellation_ratio > kMaxCancellationRatio) {
        std::ostringstream os;
        os << "density_series: cancellation ratio " << out.cancellation_ratio << " at a = " << a << ", t = " << t;
        throw LossOfPrecisionError(os.str());
    }
    if (out.value < -(1e-15 * out.cancellation_ratio * std::abs(out.value) + 1e-300)) {
        std::ostringstream os;
        os << "density_series: negative value " << out.value << " at a = " << a << ", t = " << t;
        throw LossOfPrecisionError(os.str());
    }
    return out;
}

DensityEvaluation density_half_closed_form(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("density_half_closed_form: t must be nonnegative");
    DensityEvaluation out;
    out.t = t;
    out.method = DensityMethod::kClosedFormHalf;
    out.cancellation_ratio = 1.0;
    if (t > 0.0) out.value = std::pow(t, -1.5) * std::exp(-0.25 / t) / (2.0 * std::sqrt(kPi));
    return out;
}

DensityEvaluation density_scaled(double a, double sigma, double t) {
    require_exponent(a);
    if (!(sigma > 0.0)) throw ParameterError("density_scaled: sigma must be positive");
    const double stretch = std::pow(sigma, 1.0 / a);
    DensityEvaluation inner = density_series(a, t * stretch);
    inner.t = t;
    inner.value *= stretch;
    return inner;
}

double tail_constant(double a, double sigma) {
    require_exponent(a);
    if (!(sigma > 0.0)) throw ParameterError("tail_constant: sigma must be positive");
    return 1.0 / (sigma * -gamma_real(-a));
}

std::vector<double> DensityGrid::nodes() const {
    if (!(t_min > 0.0 && t_max > t_min) || points < 2) {
        throw ParameterError("DensityGrid: need 0 < t_min < t_max and at least 2 points");
    }
    std::vector<double> out(points);
    const double lo = std::log(t_min);
    const double step = (std::log(t_max) - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) out[i] = std::exp(lo + step * static_cast<double>(i));
    out.front() = t_min;
    out.back() = t_max;
    return out;
}

CMCertificate density_domination(double gamma1, double sigma1, double gamma2, double sigma2, const DensityGrid& grid) {
    if (!(gamma1 > 0.0 && gamma1 <= gamma2 && gamma2 < 2.0)) {
        throw ParameterError("density_domination: need 0 < gamma1 <= gamma2 < 2");
    }
    if (!(sigma1 > 0.0 && sigma2 > 0.0)) throw ParameterError("density_domination: sigmas must be positive");
    const double a1 = gamma1 / 2.0;
    const double a2 = gamma2 / 2.0;

    CMCertificate cert;
    cert.gamma1 = gamma1;
    cert.sigma1 = sigma1;
    cert.gamma2 = gamma2;
    cert.sigma2 = sigma2;

    std::vector<double> g1, g2;
    for (double t : grid.nodes()) {
        try {
            const double v1 = density_scaled(a1, sigma1, t).value;
            const double v2 = density_scaled(a2, sigma2, t).value;
            cert.grid.push_back(t);
            g1.push_back(v1);
            g2.push_back(v2);
        } catch (const LossOfPrecisionError&) {
            ++cert.dropped_points;
        } catch (const NonconvergenceError&) {
            ++cert.dropped_points;
        }
    }
    if (cert.grid.size() < kMinGuardedPoints) {
        std::ostringstream os;
        os << "density_domination: only " << cert.grid.size() << " grid points pass the cancellation guard";
        throw GuardError(os.str());
    }
    cert.t_min = cert.grid.front();
    cert.t_max = cert.grid.back();

    bool dominating_positive = true;
    std::vector<double> ratio(cert.grid.size());
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        if (!(g1[i] > 0.0)) {
            dominating_positive = false;
            ratio[i] = std::numeric_limits<double>::infinity();
        } else {
            ratio[i] = g2[i] / g1[i];
        }
    }
    const auto argmax = static_cast<std::size_t>(std::max_element(ratio.begin(), ratio.end()) - ratio.begin());
    cert.max_ratio = ratio[argmax];
    cert.c_squared = kSafetyFactor * std::max(cert.max_ratio, std::numeric_limits<double>::min());
    cert.ratio_grows_toward_t_min = argmax == 0 && ratio[0] > ratio[1] && ratio[1] > ratio[2];

    cert.min_difference = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        cert.min_difference = std::min(cert.min_difference, cert.c_squared * g1[i] - g2[i]);
    }

    const double c1 = tail_constant(a1, sigma1);
    const double c2 = tail_constant(a2, sigma2);
    const double tail1 = cert.c_squared * c1 * std::pow(cert.t_max, -a1 - 1.0);
    const double tail2 = c2 * std::pow(cert.t_max, -a2 - 1.0);
    cert.tail_ok = std::isfinite(cert.c_squared) && tail1 >= tail2 && (a1 < a2 || cert.c_squared * c1 >= c2);

    if (!dominating_positive) cert.notes.emplace_back("dominating density is not positive on the whole guarded grid");
    if (cert.ratio_grows_toward_t_min) {
        cert.notes.emplace_back("g2/g1 grows monotonically toward t_min; no finite c is resolvable on this range");
    }
    if (!cert.tail_ok) cert.notes.emplace_back("tail asymptotes do not guarantee dominance beyond t_max");
    if (cert.dropped_points > 0) {
        std::ostringstream os;
        os << cert.dropped_points << " grid points dropped by the cancellation guard";
        cert.notes.push_back(os.str());
    }
    cert.notes.emplace_back(
        "finite-range numerical certificate on [t_min, t_max] plus tail-asymptote comparison; not a proof near t = 0");

    cert.success = dominating_positive && std::isfinite(cert.c_squared) && cert.min_difference >= 0.0 &&
                   cert.tail_ok && !cert.ratio_grows_toward_t_min;
    return cert;
}

CMCertificate cm_certificate(double gamma1, double sigma1, double gamma2, double sigma2, const DensityGrid& grid) {
    if (!(gamma1 > 0.0 && gamma1 < gamma2 && gamma2 < 2.0)) {
        throw ParameterError("cm_certificate: need 0 < gamma1 < gamma2 < 2");
    }
    return density_domination(gamma1, sigma1, gamma2, sigma2, grid);
}

} // namespace zonal
