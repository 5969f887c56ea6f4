#pragma once

#include <cstddef>
#include <vector>

namespace zonal {

/// Truncated power series sum_{n <= order} c_n z^n with exact-to-order
/// arithmetic. Binary operations take the smaller of the two orders.
class FormalSeries {
public:
    FormalSeries() = default;
    explicit FormalSeries(std::size_t order);
    explicit FormalSeries(std::vector<double> coeffs);

    [[nodiscard]] static FormalSeries constant(double value, std::size_t order);
    /// The series z (truncated at order).
    [[nodiscard]] static FormalSeries identity(std::size_t order);
    /// (1 - z)^p by the binomial series.
    [[nodiscard]] static FormalSeries one_minus_z_pow(double p, std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<double>& coeffs() const { return coeffs_; }
    [[nodiscard]] double operator[](std::size_t n) const { return coeffs_[n]; }
    double& operator[](std::size_t n) { return coeffs_[n]; }

    FormalSeries& operator+=(const FormalSeries& other);
    FormalSeries& operator-=(const FormalSeries& other);
    FormalSeries& operator*=(double scalar);

    friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) { return lhs += rhs; }
    friend FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs) { return lhs -= rhs; }
    friend FormalSeries operator*(FormalSeries lhs, double s) { return lhs *= s; }
    friend FormalSeries operator*(double s, FormalSeries rhs) { return rhs *= s; }
    friend FormalSeries operator*(const FormalSeries& lhs, const FormalSeries& rhs);

    /// exp(S) for S with zero constant term; throws ParameterError otherwise.
    [[nodiscard]] FormalSeries exp() const;

    /// this(inner(z)) for inner with zero constant term (Horner in series
    /// arithmetic); throws ParameterError otherwise.
    [[nodiscard]] FormalSeries compose(const FormalSeries& inner) const;

private:
    std::vector<double> coeffs_ = {0.0};
};

} // namespace zonal
