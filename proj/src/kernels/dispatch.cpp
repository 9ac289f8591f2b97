#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "xyquench/kernels.hpp"

namespace xyq::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

SimdLevel initial_level() {
  const SimdLevel best = detect_simd_level();
  if (const char* env = std::getenv("XYQUENCH_SIMD")) {
    const std::string requested(env);
    if (requested == "scalar") {
      return SimdLevel::scalar;
    }
    if (requested == "avx2" && best == SimdLevel::avx2) {
      return SimdLevel::avx2;
    }
  }
  return best;
}

std::atomic<SimdLevel>& level_slot() {
  static std::atomic<SimdLevel> level{initial_level()};
  return level;
}

void check_sizes(std::size_t a, std::size_t b, std::size_t out) {
  if (a != out || b != out) {
    throw std::invalid_argument("kernel input and output spans differ in length");
  }
}

}  // namespace

std::string_view to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return "scalar";
    case SimdLevel::avx2:
      return "avx2";
  }
  return "unknown";
}

SimdLevel detect_simd_level() { return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar; }

SimdLevel active_simd_level() { return level_slot().load(std::memory_order_relaxed); }

void set_simd_level(SimdLevel level) {
  if (level == SimdLevel::avx2 && detect_simd_level() != SimdLevel::avx2) {
    throw std::invalid_argument("AVX2 kernels are not available on this machine");
  }
  level_slot().store(level, std::memory_order_relaxed);
}

void phase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                      double alpha, std::span<double> out) {
  check_sizes(cos_k.size(), sin_k.size(), out.size());
#if defined(__x86_64__)
  if (active_simd_level() == SimdLevel::avx2) {
    return avx2::phase_over_modes(cos_k, sin_k, field, alpha, out);
  }
#endif
  scalar::phase_over_modes(cos_k, sin_k, field, alpha, out);
}

void phase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                       std::span<double> out) {
  check_sizes(fields.size(), fields.size(), out.size());
#if defined(__x86_64__)
  if (active_simd_level() == SimdLevel::avx2) {
    return avx2::phase_over_fields(cos_k, sin_k, alpha, fields, out);
  }
#endif
  scalar::phase_over_fields(cos_k, sin_k, alpha, fields, out);
}

void dphase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                       double alpha, std::span<double> out) {
  check_sizes(cos_k.size(), sin_k.size(), out.size());
#if defined(__x86_64__)
  if (active_simd_level() == SimdLevel::avx2) {
    return avx2::dphase_over_modes(cos_k, sin_k, field, alpha, out);
  }
#endif
  scalar::dphase_over_modes(cos_k, sin_k, field, alpha, out);
}

void dphase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                        std::span<double> out) {
  check_sizes(fields.size(), fields.size(), out.size());
#if defined(__x86_64__)
  if (active_simd_level() == SimdLevel::avx2) {
    return avx2::dphase_over_fields(cos_k, sin_k, alpha, fields, out);
  }
#endif
  scalar::dphase_over_fields(cos_k, sin_k, alpha, fields, out);
}

}  // namespace xyq::kernels
