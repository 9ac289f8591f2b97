#pragma once

#include <span>
#include <vector>

#include "xyquench/chain.hpp"
#include "xyquench/quench.hpp"

namespace xyq {

struct ModePhaseRecord {
  double k = 0.0;
  double t = 0.0;
  double field = 0.0;
  double gamma_k = 0.0;    // [0, 2 pi]
  double dgamma_dB = 0.0;  // >= 0
};

struct PhaseSummary {
  double gamma_initial = 0.0;
  double gamma_critical = 0.0;
  double gamma_final = 0.0;
  std::vector<double> excluded_modes;  // positive representatives of the excluded +-k pairs
};

/// Gamma_k = pi (1 - cos theta_k). Throws DegeneratePointError at gapless points.
double mode_phase(double k, double field, double alpha);

/// Gamma_k(t) under the linear ramp; identical to mode_phase(k, -t/tau_q, alpha).
double mode_phase_at_time(double k, double t, double tau_q, double alpha);

/// alpha = 0: Gamma_k = 2 pi when B(t) > cos k, else 0. The edge B = cos k throws.
double mode_phase_xx(double k, double t, double tau_q);

/// alpha = 1 closed form, written in terms of t/tau_q.
double mode_phase_ising(double k, double t, double tau_q);

/// dGamma_k/dB = pi alpha^2 sin^2 k / ((cos k + t/tau_q)^2 + alpha^2 sin^2 k)^{3/2}.
double dphase_dB(double k, double t, double tau_q, double alpha);

ModePhaseRecord mode_record(double k, double t, double tau_q, double alpha);

/// Per-pair phases on the positive grid at field B. Gapless modes throw, naming k.
std::vector<double> mode_phases(const ChainSpec& spec, double field);

/// Sum of Gamma_k over the positive grid, one term per (k, -k) pair.
double total_phase(const ChainSpec& spec, double field);

/// Total phase at the critical point t = -tau_q (B = 1).
double critical_phase(const ChainSpec& spec, double tau_q);

/// Total phase at B = 0 with the pairs in `excluded` dropped. Momenta may be
/// given with either sign; each must lie on the grid (to 1e-12).
double final_phase(const ChainSpec& spec, std::span<const double> excluded);

/// Pairs whose Landau-Zener excitation probability is at least one half.
std::vector<double> likely_excited_modes(const KinkReport& report);

/// Initial (B at schedule start), critical, and final phases for a ramp,
/// excluding from the final state the pairs likely excited by the quench.
PhaseSummary phase_summary(const ChainSpec& spec, const QuenchSchedule& schedule,
                           const KinkReport& kinks);

struct ScanRow {
  double alpha = 0.0;
  int n_sites = 0;
  double gamma_over_pairs = 0.0;  // Gamma_g / M with M = N/2
};

/// Gamma_g / M over every (alpha, N) combination, alpha-major. Requires
/// B in (-1, 1) (throws std::domain_error otherwise) and alpha > 0.
std::vector<ScanRow> noncontractibility_scan(double field, std::span<const double> alphas,
                                             std::span<const int> sizes);

/// alpha -> 0 after N -> infinity limit of Gamma_g / M: 2 pi (1 - arccos(B)/pi).
double noncontractible_limit(double field);

}  // namespace xyq
