#include "zonal/formal_series.hpp"

#include <algorithm>

#include "zonal/errors.hpp"

namespace zonal {

FormalSeries::FormalSeries(std::size_t order) : coeffs_(order + 1, 0.0) {}

FormalSeries::FormalSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

FormalSeries FormalSeries::constant(double value, std::size_t order) {
    FormalSeries s(order);
    s[0] = value;
    return s;
}

FormalSeries FormalSeries::identity(std::size_t order) {
    FormalSeries s(order);
    if (order >= 1) s[1] = 1.0;
    return s;
}

FormalSeries FormalSeries::one_minus_z_pow(double p, std::size_t order) {
    // c_n = (-1)^n binom(p, n), c_{n+1} = c_n (n - p) / (n + 1)
    FormalSeries s(order);
    s[0] = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        s[n + 1] = s[n] * (static_cast<double>(n) - p) / static_cast<double>(n + 1);
    }
    return s;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
}

FormalSeries& FormalSeries::operator*=(double scalar) {
    for (double& c : coeffs_) c *= scalar;
    return *this;
}

FormalSeries operator*(const FormalSeries& lhs, const FormalSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    FormalSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs[i] == 0.0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += lhs[i] * rhs[j];
    }
    return out;
}

FormalSeries FormalSeries::exp() const {
    if (coeffs_[0] != 0.0) throw ParameterError("formal exp requires a zero constant term");
    // E' = S' E  =>  n e_n = sum_{k=1}^n k s_k e_{n-k}
    const std::size_t n_max = order();
    FormalSeries e(n_max);
    e[0] = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * coeffs_[k] * e[n - k];
        e[n] = acc / static_cast<double>(n);
    }
    return e;
}

FormalSeries FormalSeries::compose(const FormalSeries& inner) const {
    if (inner[0] != 0.0) throw ParameterError("formal composition requires an inner series with zero constant term");
    const std::size_t n_max = std::min(order(), inner.order());
    FormalSeries out = FormalSeries::constant(coeffs_[n_max], n_max);
    for (std::size_t k = n_max; k-- > 0;) {
        out = out * inner;
        out[0] += coeffs_[k];
    }
    return out;
}

} // namespace zonal
