#include "zonal/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zonal/errors.hpp"

namespace zonal {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_open_disk(complex z) {
    if (!(std::abs(z) < 1.0)) {
        std::ostringstream os;
        os << "kernel evaluation requires |z| < 1, got z = " << z;
        throw DomainError(os.str());
    }
}

// pi + i log(z + i sqrt(1 - z^2)); for |z| < 1 the log argument has
// argument in (0, pi) and never touches the cut.
complex pi_minus_arccos(complex z) {
    const complex i{0.0, 1.0};
    const complex root = std::sqrt(1.0 - z * z);
    return kPi + i * std::log(z + i * root);
}

complex kappa0_unchecked(complex z) { return pi_minus_arccos(z) / kPi; }

complex kappa1_unchecked(complex z) {
    const complex root = std::sqrt(1.0 - z * z);
    return (z * pi_minus_arccos(z) + root) / kPi;
}

complex ntk_unchecked(int k, double beta, complex z) {
    const double bias = beta * beta;
    complex sigma = z;
    complex value = z + bias;
    for (int layer = 1; layer <= k; ++layer) {
        const complex next = kappa1_unchecked(sigma);
        value = next + value * kappa0_unchecked(sigma) + bias;
        sigma = next;
    }
    return value;
}

double kappa0_real(double u) { return (kPi - std::acos(u)) / kPi; }

} // namespace

double Laplace::c_tilde() const { return std::numbers::sqrt2 * c; }

Laplace Laplace::with_c_tilde(double c_tilde) { return Laplace{c_tilde / std::numbers::sqrt2}; }

double ExpPower::scale() const { return std::pow(2.0, gamma / 2.0) / sigma; }

void validate(const ZonalKernel& kernel) {
    std::visit(overloaded{
                   [](const Laplace& k) {
                       if (!(k.c > 0.0) || !std::isfinite(k.c)) throw ParameterError("Laplace: c must be positive");
                   },
                   [](const Gaussian& k) {
                       if (!(k.c > 0.0) || !std::isfinite(k.c)) throw ParameterError("Gaussian: c must be positive");
                   },
                   [](const ExpPower& k) {
                       if (!(k.gamma > 0.0 && k.gamma < 2.0)) throw ParameterError("ExpPower: gamma must lie in (0, 2)");
                       if (!(k.sigma > 0.0) || !std::isfinite(k.sigma)) throw ParameterError("ExpPower: sigma must be positive");
                   },
                   [](const ArcCos0&) {},
                   [](const ArcCos1&) {},
                   [](const Kappa1Iterate& k) {
                       if (k.k < 1) throw ParameterError("Kappa1Iterate: k must be >= 1");
                   },
                   [](const Ntk& k) {
                       if (k.k < 1) throw ParameterError("NTK: k must be >= 1");
                       if (!(k.beta >= 0.0) || !std::isfinite(k.beta)) throw ParameterError("NTK: beta must be nonnegative");
                   },
               },
               kernel);
}

std::string describe(const ZonalKernel& kernel) {
    std::ostringstream os;
    os.precision(10);
    std::visit(overloaded{
                   [&](const Laplace& k) { os << "laplace(c_tilde=" << k.c_tilde() << ")"; },
                   [&](const Gaussian& k) { os << "gaussian(c=" << k.c << ")"; },
                   [&](const ExpPower& k) { os << "exp_power(gamma=" << k.gamma << ",sigma=" << k.sigma << ")"; },
                   [&](const ArcCos0&) { os << "arccos0"; },
                   [&](const ArcCos1&) { os << "arccos1"; },
                   [&](const Kappa1Iterate& k) { os << "kappa1_iterate(k=" << k.k << ")"; },
                   [&](const Ntk& k) { os << "ntk(k=" << k.k << ",beta=" << k.beta << ")"; },
               },
               kernel);
    return os.str();
}

bool is_positive_definite(const ZonalKernel&) {
    // Every kernel in the zoo has nonnegative Maclaurin coefficients.
    return true;
}

complex eval_kappa0(complex z) {
    require_open_disk(z);
    return kappa0_unchecked(z);
}

complex eval_kappa1(complex z) {
    require_open_disk(z);
    return kappa1_unchecked(z);
}

complex eval_kappa1_iterate(int k, complex z) {
    if (k < 1) throw ParameterError("kappa1 iterate: k must be >= 1");
    require_open_disk(z);
    complex value = z;
    for (int i = 0; i < k; ++i) value = kappa1_unchecked(value);
    return value;
}

complex eval_ntk(int k, double beta, complex z) {
    validate(Ntk{k, beta});
    require_open_disk(z);
    return ntk_unchecked(k, beta, z);
}

complex eval_zonal(const ZonalKernel& kernel, complex z) {
    validate(kernel);
    require_open_disk(z);
    return std::visit(overloaded{
                          [&](const Laplace& k) { return std::exp(-k.c_tilde() * std::sqrt(1.0 - z)); },
                          [&](const Gaussian& k) { return std::exp(-2.0 * k.c * (1.0 - z)); },
                          [&](const ExpPower& k) { return std::exp(-k.scale() * std::pow(1.0 - z, k.gamma / 2.0)); },
                          [&](const ArcCos0&) { return kappa0_unchecked(z); },
                          [&](const ArcCos1&) { return kappa1_unchecked(z); },
                          [&](const Kappa1Iterate& k) {
                              complex value = z;
                              for (int i = 0; i < k.k; ++i) value = kappa1_unchecked(value);
                              return value;
                          },
                          [&](const Ntk& k) { return ntk_unchecked(k.k, k.beta, z); },
                      },
                      kernel);
}

double iterate_minus_one(int k) {
    if (k < 0) throw ParameterError("iterate_minus_one: k must be >= 0");
    double a = -1.0;
    for (int i = 0; i < k; ++i) {
        // kappa1(-1) = 0 exactly; the generic formula leaves a roundoff residue.
        a = (a == -1.0) ? 0.0 : (a * (kPi - std::acos(a)) + std::sqrt(1.0 - a * a)) / kPi;
    }
    return a;
}

double ntk_at_minus_one(int k, double beta) {
    validate(Ntk{k, beta});
    const double bias = beta * beta;
    double value = -1.0 + bias;
    double previous = -1.0;
    for (int layer = 1; layer <= k; ++layer) {
        const double current = iterate_minus_one(layer);
        value = current + bias + value * kappa0_real(previous);
        previous = current;
    }
    return value;
}

double value_at_one(const ZonalKernel& kernel) {
    validate(kernel);
    if (const auto* ntk = std::get_if<Ntk>(&kernel)) {
        return (ntk->k + 1) * (1.0 + ntk->beta * ntk->beta);
    }
    return 1.0;
}

double value_at_minus_one(const ZonalKernel& kernel) {
    validate(kernel);
    return std::visit(overloaded{
                          [](const Laplace& k) { return std::exp(-k.c_tilde() * std::numbers::sqrt2); },
                          [](const Gaussian& k) { return std::exp(-4.0 * k.c); },
                          [](const ExpPower& k) { return std::exp(-k.scale() * std::pow(2.0, k.gamma / 2.0)); },
                          [](const ArcCos0&) { return 0.0; },
                          [](const ArcCos1&) { return 0.0; },
                          [](const Kappa1Iterate& k) { return iterate_minus_one(k.k); },
                          [](const Ntk& k) { return ntk_at_minus_one(k.k, k.beta); },
                      },
                      kernel);
}

} // namespace zonal
