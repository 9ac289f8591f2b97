#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace xyq::kernels::detail {

inline constexpr double kQuietNaN = std::numeric_limits<double>::quiet_NaN();

// x = cos k - B, g = alpha sin k. The AVX2 lanes replay exactly this sequence.
inline double phase(double x, double g) {
  const double d = x * x + g * g;
  if (d == 0.0) {
    return kQuietNaN;
  }
  return std::numbers::pi * (1.0 - x / std::sqrt(d));
}

inline double dphase(double x, double g) {
  const double g2 = g * g;
  const double d = x * x + g2;
  if (d == 0.0) {
    return kQuietNaN;
  }
  return std::numbers::pi * g2 / (d * std::sqrt(d));
}

}  // namespace xyq::kernels::detail
