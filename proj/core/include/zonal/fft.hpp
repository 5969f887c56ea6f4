#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace zonal::fft {

enum class Direction { kForward, kInverse };

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 decimation-in-time transform.
///
/// Forward computes X_n = sum_m x_m exp(-2 pi i n m / M); the inverse uses the
/// opposite sign and does not rescale by 1/M. The butterfly order is fixed, so
/// results are bit-reproducible for a given input. Throws ConfigError when the
/// length is not a power of two.
void transform(std::span<std::complex<double>> data, Direction direction = Direction::kForward);

} // namespace zonal::fft
