#include "zonal/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "zonal/errors.hpp"
#include "zonal/fft.hpp"

namespace zonal {

namespace {

constexpr double kPi = std::numbers::pi;

// Laplace and ExpPower share exp(-c (1 - z)^p) = e^{-c} exp(-c ((1 - z)^p - 1)).
FormalSeries exp_of_power(double c, double p, std::size_t order) {
    FormalSeries s = FormalSeries::one_minus_z_pow(p, order);
    s[0] = 0.0;
    return std::exp(-c) * (-c * s).exp();
}

} // namespace

void ExtractionConfig::validate() const {
    std::ostringstream why;
    if (!(radius > 0.0 && radius < 1.0)) {
        why << "radius must lie in (0, 1), got " << radius;
    } else if (!fft::is_power_of_two(sample_count)) {
        why << "sample_count must be a power of two, got " << sample_count;
    } else if (max_order > sample_count / 4) {
        why << "max_order " << max_order << " exceeds sample_count / 4";
    } else if (std::pow(radius, -static_cast<double>(max_order)) > 1e4) {
        why << "radius^-max_order = " << std::pow(radius, -static_cast<double>(max_order)) << " exceeds 1e4";
    } else if (std::pow(radius, static_cast<double>(sample_count)) > 1e-40) {
        why << "radius^sample_count = " << std::pow(radius, static_cast<double>(sample_count)) << " exceeds 1e-40";
    } else {
        return;
    }
    throw ConfigError("extraction config: " + why.str());
}

double SeriesCoefficients::max_error_bound() const {
    return error_bound.empty() ? 0.0 : *std::max_element(error_bound.begin(), error_bound.end());
}

SeriesCoefficients cauchy_coefficients(const std::function<complex(complex)>& f, std::string label,
                                       const ExtractionConfig& config) {
    config.validate();
    const std::size_t m = config.sample_count;
    const double r = config.radius;

    std::vector<complex> samples(m);
    double max_abs = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
        samples[j] = f(std::polar(r, angle));
        max_abs = std::max(max_abs, std::abs(samples[j]));
    }
    fft::transform(samples, fft::Direction::kForward);

    SeriesCoefficients out;
    out.label = std::move(label);
    out.config = config;
    out.max_abs_on_circle = max_abs;
    out.coeffs.resize(config.max_order + 1);
    out.error_bound.resize(config.max_order + 1);

    const double md = static_cast<double>(m);
    const double r_m = std::pow(r, md);
    const double roundoff = kRoundoffConstant * std::sqrt(md) * std::numeric_limits<double>::epsilon() * max_abs;
    for (std::size_t n = 0; n <= config.max_order; ++n) {
        const double nd = static_cast<double>(n);
        const double scale = std::pow(r, -nd);
        const complex c = samples[n] * (scale / md);
        const double aliasing = max_abs * std::pow(r, md - nd) / (1.0 - r_m);
        const double bound = aliasing + roundoff * scale;
        if (std::abs(c.imag()) > bound) {
            std::ostringstream os;
            os << "coefficient " << n << " of " << out.label << " has imaginary part " << c.imag()
               << " above its error bound " << bound;
            throw NumericalHealthError(os.str());
        }
        out.coeffs[n] = c.real();
        out.error_bound[n] = bound;
    }
    return out;
}

SeriesCoefficients cauchy_coefficients(const ZonalKernel& kernel, const ExtractionConfig& config) {
    validate(kernel);
    auto out = cauchy_coefficients([&kernel](complex z) { return eval_zonal(kernel, z); }, describe(kernel), config);
    out.kernel = kernel;
    return out;
}

SeriesCoefficients scaled(const SeriesCoefficients& series, double s) {
    if (!(s > 0.0)) throw ParameterError("scaled: factor must be positive");
    SeriesCoefficients out = series;
    for (double& c : out.coeffs) c *= s;
    for (double& e : out.error_bound) e *= s;
    out.max_abs_on_circle *= s;
    std::ostringstream os;
    os.precision(10);
    os << s << "*" << series.label;
    out.label = os.str();
    out.kernel.reset();
    return out;
}

FormalSeries kappa1_series_oracle(std::size_t order) {
    FormalSeries s(order);
    s[0] = 1.0 / kPi;
    if (order >= 1) s[1] = 0.5;
    // t_n = (2n-3)!! / (n! 2^n): t_1 = 1/2, t_{n+1} = t_n (2n-1) / (2(n+1)).
    double t = 0.5;
    for (std::size_t n = 1; 2 * n <= order; ++n) {
        const double nd = static_cast<double>(n);
        s[2 * n] = t / ((2.0 * nd - 1.0) * kPi);
        t *= (2.0 * nd - 1.0) / (2.0 * (nd + 1.0));
    }
    return s;
}

FormalSeries kappa0_series_oracle(std::size_t order) {
    FormalSeries s(order);
    s[0] = 0.5;
    // u_n = (2n)! / (4^n (n!)^2): u_0 = 1, u_{n+1} = u_n (2n+1) / (2n+2).
    double u = 1.0;
    for (std::size_t n = 0; 2 * n + 1 <= order; ++n) {
        const double nd = static_cast<double>(n);
        s[2 * n + 1] = u / ((2.0 * nd + 1.0) * kPi);
        u *= (2.0 * nd + 1.0) / (2.0 * nd + 2.0);
    }
    return s;
}

FormalSeries closed_form_series(const ZonalKernel& kernel, std::size_t order) {
    validate(kernel);
    if (const auto* k = std::get_if<Laplace>(&kernel)) return exp_of_power(k->c_tilde(), 0.5, order);
    if (const auto* k = std::get_if<ExpPower>(&kernel)) return exp_of_power(k->scale(), k->gamma / 2.0, order);
    if (const auto* k = std::get_if<Gaussian>(&kernel)) {
        FormalSeries s(order);
        s[0] = std::exp(-2.0 * k->c);
        for (std::size_t n = 1; n <= order; ++n) s[n] = s[n - 1] * 2.0 * k->c / static_cast<double>(n);
        return s;
    }
    if (std::holds_alternative<ArcCos0>(kernel)) return kappa0_series_oracle(order);
    if (std::holds_alternative<ArcCos1>(kernel)) return kappa1_series_oracle(order);
    if (const auto* k = std::get_if<Kappa1Iterate>(&kernel); k && k->k == 1) return kappa1_series_oracle(order);
    if (const auto* k = std::get_if<Ntk>(&kernel); k && k->k == 1) {
        const double bias = k->beta * k->beta;
        const FormalSeries inner = FormalSeries::identity(order) + FormalSeries::constant(bias, order);
        return kappa1_series_oracle(order) + inner * kappa0_series_oracle(order) + FormalSeries::constant(bias, order);
    }
    throw UnsupportedKernelError("closed_form_series: no exact expansion for " + describe(kernel));
}

namespace {

// sum_{j >= m} j^{-p}, Euler-Maclaurin
double power_tail(double p, double m) {
    return std::pow(m, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(m, -p) + p * std::pow(m, -p - 1.0) / 12.0 -
           p * (p + 1.0) * (p + 2.0) * std::pow(m, -p - 3.0) / 720.0;
}

// sum_{j >= m} (-1)^j j^{-p}, Boole summation
double alternating_power_tail(double p, std::size_t m) {
    const double x = static_cast<double>(m);
    const double sign = (m % 2 == 1) ? -1.0 : 1.0;
    return sign * (0.5 * std::pow(x, -p) + 0.25 * p * std::pow(x, -p - 1.0) -
                   p * (p + 1.0) * (p + 2.0) * std::pow(x, -p - 3.0) / 48.0);
}

} // namespace

double tail_sum_three_halves(std::size_t n) {
    if (n == 0) throw ParameterError("tail_sum_three_halves: n must be positive");
    const double x = static_cast<double>(n);
    return 2.0 / std::sqrt(x) - 0.5 * std::pow(x, -1.5) + 0.125 * std::pow(x, -2.5) -
           (13.125 / 720.0) * std::pow(x, -4.5);
}

PartialSumEstimate endpoint_sum(const SeriesCoefficients& series, Endpoint endpoint, std::size_t fit_window) {
    const std::size_t n_max = series.max_order();
    if (fit_window == 0) fit_window = 2 * (n_max / 4);
    if (fit_window < 8 || fit_window % 2 != 0 || fit_window >= n_max) {
        throw DegenerateInputError("endpoint_sum: fit window must be even, at least 8 and below max_order");
    }
    PartialSumEstimate est;
    est.last_order = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double sign = (endpoint == Endpoint::kMinusOne && n % 2 == 1) ? -1.0 : 1.0;
        est.partial_sum += sign * series.coeffs[n];
    }

    // increment * n^{3/2} ~ A + B (-1)^n + (C + D (-1)^n) / n
    const auto rows = static_cast<Eigen::Index>(fit_window);
    Eigen::MatrixXd design(rows, 4);
    Eigen::VectorXd y(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const std::size_t n = n_max - fit_window + 1 + static_cast<std::size_t>(i);
        const double nd = static_cast<double>(n);
        const double parity = (n % 2 == 1) ? -1.0 : 1.0;
        const double sign = endpoint == Endpoint::kMinusOne ? parity : 1.0;
        design.row(i) << 1.0, parity, 1.0 / nd, parity / nd;
        y(i) = sign * series.coeffs[n] * std::pow(nd, 1.5);
    }
    const Eigen::Vector4d fit = design.colPivHouseholderQr().solve(y);
    est.tail_constant = fit(0);
    est.alternating_constant = fit(1);

    const double m = static_cast<double>(n_max + 1);
    est.tail = fit(0) * tail_sum_three_halves(n_max) + fit(1) * alternating_power_tail(1.5, n_max + 1) +
               fit(2) * power_tail(2.5, m) + fit(3) * alternating_power_tail(2.5, n_max + 1);
    est.extrapolated = est.partial_sum + est.tail;
    return est;
}

} // namespace zonal
