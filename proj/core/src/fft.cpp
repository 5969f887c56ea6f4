#include "zonal/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "zonal/errors.hpp"

namespace zonal::fft {

namespace {

void bit_reverse_permute(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
}

// Twiddles are evaluated directly per index rather than by recurrence, which
// keeps their error at one ulp regardless of the transform length.
std::vector<std::complex<double>> twiddles(std::size_t n, double sign) {
    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(angle), std::sin(angle)};
    }
    return w;
}

} // namespace

void transform(std::span<std::complex<double>> data, Direction direction) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) throw ConfigError("fft: length must be a power of two");
    if (n == 1) return;

    bit_reverse_permute(data);
    const auto w = twiddles(n, direction == Direction::kForward ? -1.0 : 1.0);

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const std::complex<double> t = w[j * stride] * data[start + j + half];
                const std::complex<double> u = data[start + j];
                data[start + j] = u + t;
                data[start + j + half] = u - t;
            }
        }
    }
}

} // namespace zonal::fft
