#include "xyquench/geophase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kernels/kernel_math.hpp"
#include "xyquench/kernels.hpp"

namespace xyq {

double mode_phase(double k, double field, double alpha) {
  return kPi * (1.0 - bogoliubov_angle(k, field, alpha));
}

double mode_phase_at_time(double k, double t, double tau_q, double alpha) {
  return mode_phase(k, field_at(t, tau_q), alpha);
}

double mode_phase_xx(double k, double t, double tau_q) {
  const double field = field_at(t, tau_q);
  const double cos_k = std::cos(k);
  if (field == cos_k) {
    throw DegeneratePointError(k, field, 0.0);
  }
  return field > cos_k ? kTwoPi : 0.0;
}

double mode_phase_ising(double k, double t, double tau_q) {
  if (!(tau_q > 0.0) || t > 0.0) {
    throw std::invalid_argument("need tau_q > 0 and t <= 0");
  }
  const double u = t / tau_q;
  const double cos_k = std::cos(k);
  const double d = 1.0 + u * u + 2.0 * u * cos_k;
  if (!(d > 0.0)) {
    throw DegeneratePointError(k, -u, 1.0);
  }
  return kPi * (1.0 - (cos_k + u) / std::sqrt(d));
}

double dphase_dB(double k, double t, double tau_q, double alpha) {
  const double field = field_at(t, tau_q);
  const double value = kernels::detail::dphase(std::cos(k) - field, alpha * std::sin(k));
  if (std::isnan(value)) {
    throw DegeneratePointError(k, field, alpha);
  }
  return value;
}

ModePhaseRecord mode_record(double k, double t, double tau_q, double alpha) {
  return ModePhaseRecord{k, t, field_at(t, tau_q), mode_phase_at_time(k, t, tau_q, alpha),
                         dphase_dB(k, t, tau_q, alpha)};
}

std::vector<double> mode_phases(const ChainSpec& spec, double field) {
  const std::vector<double> ks = momentum_grid(spec);
  std::vector<double> cos_k(ks.size());
  std::vector<double> sin_k(ks.size());
  std::transform(ks.begin(), ks.end(), cos_k.begin(), [](double k) { return std::cos(k); });
  std::transform(ks.begin(), ks.end(), sin_k.begin(), [](double k) { return std::sin(k); });
  std::vector<double> gammas(ks.size());
  kernels::phase_over_modes(cos_k, sin_k, field, spec.alpha, gammas);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (std::isnan(gammas[i])) {
      throw DegeneratePointError(ks[i], field, spec.alpha);
    }
  }
  return gammas;
}

double total_phase(const ChainSpec& spec, double field) {
  double sum = 0.0;
  for (double g : mode_phases(spec, field)) {
    sum += g;
  }
  return sum;
}

double critical_phase(const ChainSpec& spec, double tau_q) {
  return total_phase(spec, field_at(-tau_q, tau_q));
}

double final_phase(const ChainSpec& spec, std::span<const double> excluded) {
  const std::vector<double> ks = momentum_grid(spec);
  const std::vector<double> gammas = mode_phases(spec, 0.0);
  std::vector<bool> drop(ks.size(), false);
  for (double k : excluded) {
    const double target = std::abs(k);
    auto it = std::find_if(ks.begin(), ks.end(),
                           [&](double grid_k) { return std::abs(grid_k - target) <= 1e-12; });
    if (it == ks.end()) {
      throw std::invalid_argument("excluded momentum is not on the grid");
    }
    drop[static_cast<std::size_t>(it - ks.begin())] = true;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!drop[i]) {
      sum += gammas[i];
    }
  }
  return sum;
}

std::vector<double> likely_excited_modes(const KinkReport& report) {
  std::vector<double> out;
  for (const auto& mp : report.per_mode_p) {
    if (mp.k > 0.0 && mp.p >= 0.5) {
      out.push_back(mp.k);
    }
  }
  return out;
}

PhaseSummary phase_summary(const ChainSpec& spec, const QuenchSchedule& schedule,
                           const KinkReport& kinks) {
  schedule.validate();
  PhaseSummary summary;
  summary.gamma_initial = total_phase(spec, schedule.field(schedule.t_start));
  summary.gamma_critical = critical_phase(spec, schedule.tau_q);
  summary.excluded_modes = likely_excited_modes(kinks);
  summary.gamma_final = final_phase(spec, summary.excluded_modes);
  return summary;
}

double noncontractible_limit(double field) {
  if (!(field > -1.0 && field < 1.0)) {
    throw std::domain_error("non-contractibility needs B in (-1, 1)");
  }
  return kTwoPi * (1.0 - std::acos(field) / kPi);
}

std::vector<ScanRow> noncontractibility_scan(double field, std::span<const double> alphas,
                                             std::span<const int> sizes) {
  if (!(field > -1.0 && field < 1.0)) {
    throw std::domain_error("non-contractibility scan needs B in (-1, 1); outside it the limit is 0 or 2 pi");
  }
  std::vector<ScanRow> rows;
  rows.reserve(alphas.size() * sizes.size());
  for (double alpha : alphas) {
    if (!(alpha > 0.0)) {
      throw std::invalid_argument("scan anisotropies must be > 0");
    }
    for (int n : sizes) {
      const ChainSpec spec = ChainSpec::make(n, alpha);
      rows.push_back({alpha, n, total_phase(spec, field) / static_cast<double>(spec.pair_count())});
    }
  }
  return rows;
}

}  // namespace xyq
