#include "xyquench/quench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace xyq {

namespace {

using cplx = std::complex<double>;
using Spinor = std::array<cplx, 2>;

// Real symmetric 2x2 operator z Z + x X.
struct TwoLevel {
  double z = 0.0;
  double x = 0.0;

  double norm() const { return std::hypot(z, x); }
};

TwoLevel pair_hamiltonian(double cos_k, double coupling, double field) {
  return TwoLevel{-2.0 * (cos_k - field), 2.0 * coupling};
}

// Eigenvector of z Z + x X with eigenvalue sign * sqrt(z^2 + x^2).
Spinor eigenvector(const TwoLevel& h, int sign) {
  const double r = h.norm();
  if (r == 0.0) {
    throw std::domain_error("two-level Hamiltonian vanishes; eigenvectors undefined");
  }
  // Bloch vector (x, 0, z)/r; the +r state sits at polar angle theta on the xz plane.
  const double theta = std::atan2(h.x, h.z);
  if (sign > 0) {
    return {cplx(std::cos(theta / 2.0)), cplx(std::sin(theta / 2.0))};
  }
  return {cplx(-std::sin(theta / 2.0)), cplx(std::cos(theta / 2.0))};
}

// psi <- exp(-i h dt) psi = [cos(r dt) - i sin(r dt) (h/r).sigma] psi
void propagate(Spinor& psi, const TwoLevel& h, double dt) {
  const double r = h.norm();
  if (r == 0.0) {
    return;
  }
  const double c = std::cos(r * dt);
  const double s = std::sin(r * dt);
  const double nz = h.z / r;
  const double nx = h.x / r;
  const cplx minus_is(0.0, -s);
  const Spinor in = psi;
  psi[0] = c * in[0] + minus_is * (nz * in[0] + nx * in[1]);
  psi[1] = c * in[1] + minus_is * (nx * in[0] - nz * in[1]);
}

double norm(const Spinor& psi) { return std::sqrt(std::norm(psi[0]) + std::norm(psi[1])); }

}  // namespace

QuenchSchedule QuenchSchedule::make(double tau_q, double t_start, double t_end) {
  QuenchSchedule s{tau_q, t_start, t_end};
  s.validate();
  return s;
}

QuenchSchedule QuenchSchedule::make(double tau_q) { return make(tau_q, -5.0 * tau_q, 0.0); }

void QuenchSchedule::validate() const {
  if (!(tau_q > 0.0) || !std::isfinite(tau_q)) {
    throw std::invalid_argument("tau_q must be finite and > 0");
  }
  if (!(t_start < t_end) || !(t_end <= 0.0) || !std::isfinite(t_start)) {
    throw std::invalid_argument("quench window must satisfy t_start < t_end <= 0");
  }
}

double field_at(double t, double tau_q) {
  if (!(tau_q > 0.0)) {
    throw std::invalid_argument("tau_q must be > 0");
  }
  if (t > 0.0) {
    throw std::invalid_argument("the linear ramp ends at t = 0; got t > 0");
  }
  return -t / tau_q;
}

double lz_probability(double k, double tau_q) {
  if (!(tau_q >= 0.0)) {
    throw std::invalid_argument("tau_q must be >= 0");
  }
  return std::exp(-2.0 * kPi * tau_q * k * k);
}

double adiabatic_threshold(int n_sites) {
  const double n = static_cast<double>(n_sites);
  return n * n / (2.0 * kPi * kPi * kPi);
}

KinkReport kink_count(const ChainSpec& spec, double tau_q, double safety_factor) {
  if (!(safety_factor > 0.0)) {
    throw std::invalid_argument("safety_factor must be > 0");
  }
  const std::vector<double> ks = momentum_grid(spec);
  KinkReport report;
  report.n_sites = spec.n_sites;
  report.tau_q = tau_q;
  report.safety_factor = safety_factor;
  report.per_mode_p.reserve(2 * ks.size());
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    report.per_mode_p.push_back({-*it, lz_probability(-*it, tau_q)});
  }
  for (double k : ks) {
    report.per_mode_p.push_back({k, lz_probability(k, tau_q)});
  }
  for (const auto& mp : report.per_mode_p) {
    report.kink_count += mp.p;
  }
  report.threshold = adiabatic_threshold(spec.n_sites);
  report.adiabatic = tau_q > safety_factor * report.threshold;
  return report;
}

double suggested_step(double k, double alpha, const QuenchSchedule& schedule) {
  schedule.validate();
  const double cos_k = std::cos(k);
  const double coupling = alpha * std::sin(k);
  const double h_max = std::max(pair_hamiltonian(cos_k, coupling, schedule.field(schedule.t_start)).norm(),
                                pair_hamiltonian(cos_k, coupling, schedule.field(schedule.t_end)).norm());
  return h_max > 0.0 ? 0.05 / h_max : 0.05;
}

EvolveResult evolve_mode(double k, double alpha, const QuenchSchedule& schedule, double dt) {
  schedule.validate();
  if (!(dt > 0.0)) {
    throw std::invalid_argument("dt must be > 0");
  }
  const double cos_k = std::cos(k);
  const double coupling = alpha * std::sin(k);
  const TwoLevel h_start = pair_hamiltonian(cos_k, coupling, schedule.field(schedule.t_start));
  const TwoLevel h_end = pair_hamiltonian(cos_k, coupling, schedule.field(schedule.t_end));
  // ||H|| is linear in B along the ramp, so its maximum sits at an endpoint.
  const double h_max = std::max(h_start.norm(), h_end.norm());
  if (dt * h_max >= 0.1) {
    throw std::invalid_argument("unstable step: dt * max||H|| must be < 0.1");
  }

  EvolveResult result;
  result.uncoupled = coupling == 0.0;
  const double b_hi = schedule.field(schedule.t_start);
  const double b_lo = schedule.field(schedule.t_end);
  result.crossing_in_window = cos_k <= b_hi && cos_k >= b_lo;
  if (!result.crossing_in_window) {
    result.warnings.emplace_back("quench window does not cover the crossing B = cos k");
  }
  if (result.uncoupled) {
    result.warnings.emplace_back("alpha sin k = 0: levels are uncoupled");
  }

  Spinor psi = eigenvector(h_start, -1);
  const double span = schedule.t_end - schedule.t_start;
  const long steps = static_cast<long>(std::ceil(span / dt));
  const double h = span / static_cast<double>(steps);
  for (long n = 0; n < steps; ++n) {
    const double t_mid = schedule.t_start + (static_cast<double>(n) + 0.5) * h;
    propagate(psi, pair_hamiltonian(cos_k, coupling, schedule.field(t_mid)), h);
    result.max_norm_drift = std::max(result.max_norm_drift, std::abs(norm(psi) - 1.0));
  }
  result.steps = steps;

  const Spinor excited = eigenvector(h_end, +1);
  const cplx amp = std::conj(excited[0]) * psi[0] + std::conj(excited[1]) * psi[1];
  result.probability = std::norm(amp);
  return result;
}

}  // namespace xyq
