#pragma once

#include <complex>
#include <string>
#include <variant>

namespace zonal {

using complex = std::complex<double>;

// Zonal kernels are functions of u = <x, y> on [-1, 1], continued
// analytically to the open unit disk with principal branches of log and sqrt.

/// Laplace kernel exp(-c_tilde * sqrt(1 - u)) with c_tilde = sqrt(2) * c,
/// i.e. exp(-c * ||x - y||) restricted to the sphere.
struct Laplace {
    double c = 1.0;

    [[nodiscard]] double c_tilde() const;
    [[nodiscard]] static Laplace with_c_tilde(double c_tilde);
};

/// Gaussian kernel exp(-2c(1 - u)) = exp(-c * ||x - y||^2) on the sphere.
struct Gaussian {
    double c = 1.0;
};

/// Exponential power kernel exp(-||x - y||^gamma / sigma), 0 < gamma < 2.
struct ExpPower {
    double gamma = 1.0;
    double sigma = 1.0;

    /// Prefactor c in exp(-c (1 - u)^{gamma/2}), c = 2^{gamma/2} / sigma.
    [[nodiscard]] double scale() const;
};

struct ArcCos0 {};
struct ArcCos1 {};

/// k-fold composition of the degree-1 arc-cosine kernel.
struct Kappa1Iterate {
    int k = 1;
};

/// Neural tangent kernel of a (k+1)-layer ReLU network with bias scale beta.
struct Ntk {
    int k = 1;
    double beta = 0.0;
};

using ZonalKernel = std::variant<Laplace, Gaussian, ExpPower, ArcCos0, ArcCos1, Kappa1Iterate, Ntk>;

/// Throws ParameterError when the kernel's parameters are out of range.
void validate(const ZonalKernel& kernel);

/// Short stable identifier, e.g. "ntk(k=2,beta=1)".
[[nodiscard]] std::string describe(const ZonalKernel& kernel);

/// True for kernels that are positive definite on every sphere.
[[nodiscard]] bool is_positive_definite(const ZonalKernel& kernel);

// Each evaluator throws DomainError when |z| >= 1.

/// (pi + i log(z + i sqrt(1 - z^2))) / pi; equals (pi - arccos z) / pi on reals.
[[nodiscard]] complex eval_kappa0(complex z);

/// (z (pi + i log(z + i sqrt(1 - z^2))) + sqrt(1 - z^2)) / pi.
[[nodiscard]] complex eval_kappa1(complex z);

[[nodiscard]] complex eval_kappa1_iterate(int k, complex z);

/// N_k(z) = kappa1^(k)(z) + N_{k-1}(z) kappa0(kappa1^(k-1)(z)) + beta^2,
/// starting from N_0(z) = z + beta^2.
[[nodiscard]] complex eval_ntk(int k, double beta, complex z);

[[nodiscard]] complex eval_zonal(const ZonalKernel& kernel, complex z);

/// a_k = kappa1^(k)(-1) by plain real iteration from -1 (a_0 = -1, a_1 = 0).
[[nodiscard]] double iterate_minus_one(int k);

/// N_k(-1) via N_k(-1) = a_k + beta^2 + N_{k-1}(-1) kappa0(a_{k-1}).
[[nodiscard]] double ntk_at_minus_one(int k, double beta);

/// Boundary values K(1) and K(-1), taken as closed forms (all kernels are
/// continuous on [-1, 1]).
[[nodiscard]] double value_at_one(const ZonalKernel& kernel);
[[nodiscard]] double value_at_minus_one(const ZonalKernel& kernel);

} // namespace zonal
