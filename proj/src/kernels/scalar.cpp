#include "kernel_math.hpp"
#include "xyquench/kernels.hpp"

namespace xyq::kernels::scalar {

void phase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                      double alpha, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::phase(cos_k[i] - field, alpha * sin_k[i]);
  }
}

void phase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                       std::span<double> out) {
  const double g = alpha * sin_k;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::phase(cos_k - fields[i], g);
  }
}

void dphase_over_modes(std::span<const double> cos_k, std::span<const double> sin_k, double field,
                       double alpha, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::dphase(cos_k[i] - field, alpha * sin_k[i]);
  }
}

void dphase_over_fields(double cos_k, double sin_k, double alpha, std::span<const double> fields,
                        std::span<double> out) {
  const double g = alpha * sin_k;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::dphase(cos_k - fields[i], g);
  }
}

}  // namespace xyq::kernels::scalar
