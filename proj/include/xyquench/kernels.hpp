#pragma once

#include <span>
#include <string_view>

// Batch evaluation of the per-mode geometric phase and its field derivative.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant chosen at runtime. Both perform the same IEEE operations in the same
// order, so their outputs are bit-identical. Gapless points (Lambda_k = 0)
// come out as quiet NaN.

namespace xyq::kernels {

enum class SimdLevel { scalar, avx2 };

std::string_view to_string(SimdLevel level);

/// Best level supported by this CPU and build.
SimdLevel detect_simd_level();

/// Level used by the dispatching entry points. Initialized from
/// detect_simd_level(), or from XYQUENCH_SIMD=scalar|avx2 when set.
SimdLevel active_simd_level();

/// Throws std::invalid_argument if the requested level is unavailable.
void set_simd_level(SimdLevel level);

// out[i] = pi * (1 - x / sqrt(x^2 + g^2)), x = cos_k[i] - field, g = alpha * sin_k[i]
void phase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                      double alpha, std::span<double> out);

// Same quantity for one mode swept over an array of fields.
void phase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                       std::span<double> out);

// out[i] = pi * g^2 / (x^2 + g^2)^{3/2}
void dphase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                       double alpha, std::span<double> out);

void dphase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                        std::span<double> out);

// Fixed-level variants, used by the equivalence tests and benchmarks.
namespace scalar {
void phase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                      double alpha, std::span<double> out);
void phase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                       std::span<double> out);
void dphase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                       double alpha, std::span<double> out);
void dphase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                        std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
void phase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                      double alpha, std::span<double> out);
void phase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                       std::span<double> out);
void dphase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                       double alpha, std::span<double> out);
void dphase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                        std::span<double> out);
}  // namespace avx2
#endif

}  // namespace xyq::kernels
