// Compiled with -mavx2 (and without -mfma) so every lane rounds like the scalar path.

#include <immintrin.h>

#include "kernel_math.hpp"
#include "xyquench/kernels.hpp"

namespace xyq::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d mask_gapless(__m256d value, __m256d d) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d is_zero = _mm256_cmp_pd(d, zero, _CMP_EQ_OQ);
  return _mm256_blendv_pd(value, _mm256_set1_pd(detail::kQuietNaN), is_zero);
}

inline __m256d phase_lanes(__m256d x, __m256d g) {
  const __m256d d = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(g, g));
  const __m256d ratio = _mm256_div_pd(x, _mm256_sqrt_pd(d));
  const __m256d value =
      _mm256_mul_pd(_mm256_set1_pd(std::numbers::pi), _mm256_sub_pd(_mm256_set1_pd(1.0), ratio));
  return mask_gapless(value, d);
}

inline __m256d dphase_lanes(__m256d x, __m256d g) {
  const __m256d g2 = _mm256_mul_pd(g, g);
  const __m256d d = _mm256_add_pd(_mm256_mul_pd(x, x), g2);
  const __m256d denom = _mm256_mul_pd(d, _mm256_sqrt_pd(d));
  const __m256d value = _mm256_div_pd(_mm256_mul_pd(_mm256_set1_pd(std::numbers::pi), g2), denom);
  return mask_gapless(value, d);
}

}  // namespace

void phase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                      double alpha, std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d b = _mm256_set1_pd(field);
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(cos_k.data() + i), b);
    const __m256d g = _mm256_mul_pd(a, _mm256_loadu_pd(sin_k.data() + i));
    _mm256_storeu_pd(out.data() + i, phase_lanes(x, g));
  }
  for (; i < n; ++i) {
    out[i] = detail::phase(cos_k[i] - field, alpha * sin_k[i]);
  }
}

void phase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                       std::span<double> out) {
  const std::size_t n = out.size();
  const double g_scalar = alpha * sin_k;
  const __m256d c = _mm256_set1_pd(cos_k);
  const __m256d g = _mm256_set1_pd(g_scalar);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_sub_pd(c, _mm256_loadu_pd(fields.data() + i));
    _mm256_storeu_pd(out.data() + i, phase_lanes(x, g));
  }
  for (; i < n; ++i) {
    out[i] = detail::phase(cos_k - fields[i], g_scalar);
  }
}

void dphase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                       double alpha, std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d b = _mm256_set1_pd(field);
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(cos_k.data() + i), b);
    const __m256d g = _mm256_mul_pd(a, _mm256_loadu_pd(sin_k.data() + i));
    _mm256_storeu_pd(out.data() + i, dphase_lanes(x, g));
  }
  for (; i < n; ++i) {
    out[i] = detail::dphase(cos_k[i] - field, alpha * sin_k[i]);
  }
}

void dphase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                        std::span<double> out) {
  const std::size_t n = out.size();
  const double g_scalar = alpha * sin_k;
  const __m256d c = _mm256_set1_pd(cos_k);
  const __m256d g = _mm256_set1_pd(g_scalar);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_sub_pd(c, _mm256_loadu_pd(fields.data() + i));
    _mm256_storeu_pd(out.data() + i, dphase_lanes(x, g));
  }
  for (; i < n; ++i) {
    out[i] = detail::dphase(cos_k - fields[i], g_scalar);
  }
}

}  // namespace xyq::kernels::avx2
