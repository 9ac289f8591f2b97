#include "xyquench/chain.hpp"

#include <cmath>
#include <sstream>

namespace xyq {

namespace {

std::string degenerate_message(double k, double field, double alpha) {
  std::ostringstream os;
  os.precision(17);
  os << "gapless point: k=" << k << " B=" << field << " alpha=" << alpha;
  return os.str();
}

}  // namespace

DegeneratePointError::DegeneratePointError(double k, double field, double alpha)
    : std::domain_error(degenerate_message(k, field, alpha)), k_(k), field_(field), alpha_(alpha) {}

ChainSpec ChainSpec::make(int n_sites, double alpha, double phi) {
  ChainSpec spec{n_sites, alpha, phi};
  spec.validate();
  return spec;
}

void ChainSpec::validate() const {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw std::invalid_argument("n_sites must be even and >= 2, got " + std::to_string(n_sites));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be finite and >= 0");
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("phi must be finite");
  }
}

std::vector<double> momentum_grid(int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw std::invalid_argument("momentum grid needs even n_sites >= 2, got " + std::to_string(n_sites));
  }
  const int pairs = n_sites / 2;
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(pairs));
  for (int m = 1; m <= pairs; ++m) {
    ks.push_back(static_cast<double>(2 * m - 1) * kPi / static_cast<double>(n_sites));
  }
  return ks;
}

std::vector<double> momentum_grid(const ChainSpec& spec) {
  spec.validate();
  return momentum_grid(spec.n_sites);
}

double dispersion(double k, double field, double alpha) {
  return std::sqrt(detail::gap_squared(std::cos(k), std::sin(k), field, alpha));
}

double bogoliubov_angle(double k, double field, double alpha) {
  const double cos_k = std::cos(k);
  const double d = detail::gap_squared(cos_k, std::sin(k), field, alpha);
  if (d == 0.0) {
    throw DegeneratePointError(k, field, alpha);
  }
  return (cos_k - field) / std::sqrt(d);
}

Mode make_mode(double k, double field, double alpha) {
  return Mode{k, dispersion(k, field, alpha), bogoliubov_angle(k, field, alpha)};
}

}  // namespace xyq
