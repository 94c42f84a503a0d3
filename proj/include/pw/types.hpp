#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include <Eigen/Core>

namespace pw {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;
// 1/sqrt(2 pi), the prefactor of the Wigner transform over tau.
inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

/// Uniform grid of `count` points from `start` to `stop` inclusive.
///
/// `count == 0` is the empty grid; `count == 1` holds only `start`.
struct UniformGrid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;

  /// Throws DomainError unless the grid is strictly increasing and finite.
  static UniformGrid linspace(double start, double stop, std::size_t count);

  [[nodiscard]] bool empty() const { return count == 0; }
  [[nodiscard]] std::size_t size() const { return count; }
  [[nodiscard]] double step() const {
    return count > 1 ? (stop - start) / static_cast<double>(count - 1) : 0.0;
  }
  // Endpoints are reproduced exactly.
  [[nodiscard]] double operator[](std::size_t i) const {
    if (count < 2) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  [[nodiscard]] double max_abs() const { return std::max(std::abs(start), std::abs(stop)); }
};

}  // namespace pw
