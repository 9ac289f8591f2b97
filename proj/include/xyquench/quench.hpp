#pragma once

#include <string>
#include <vector>

#include "xyquench/chain.hpp"

namespace xyq {

/// Linear ramp B(t) = -t / tau_q on a window t_start < t_end <= 0.
struct QuenchSchedule {
  double tau_q = 1.0;
  double t_start = -5.0;
  double t_end = 0.0;

  /// Default window starts at -5 tau_q (B = 5) and ends when the field is off.
  static QuenchSchedule make(double tau_q, double t_start, double t_end = 0.0);
  static QuenchSchedule make(double tau_q);
  void validate() const;

  double field(double t) const { return -t / tau_q; }
};

/// B(t) = -t / tau_q. Throws std::invalid_argument for t > 0 or tau_q <= 0.
double field_at(double t, double tau_q);

/// Landau-Zener excitation probability exp(-2 pi tau_q k^2).
double lz_probability(double k, double tau_q);

/// N^2 / (2 pi^3): below this quench time the k0 pair cannot follow adiabatically.
double adiabatic_threshold(int n_sites);

inline constexpr double kDefaultSafetyFactor = 10.0;

struct ModeProbability {
  double k = 0.0;
  double p = 0.0;
};

struct KinkReport {
  int n_sites = 0;
  double tau_q = 0.0;
  std::vector<ModeProbability> per_mode_p;  // both +k and -k, in order -k_max..-k0, k0..k_max
  double kink_count = 0.0;
  double threshold = 0.0;
  double safety_factor = kDefaultSafetyFactor;
  bool adiabatic = false;
};

KinkReport kink_count(const ChainSpec& spec, double tau_q,
                      double safety_factor = kDefaultSafetyFactor);

struct EvolveResult {
  double probability = 0.0;     // |<excited(t_end)|psi(t_end)>|^2
  double max_norm_drift = 0.0;  // max | ||psi|| - 1 | over the run
  long steps = 0;
  bool uncoupled = false;       // alpha sin k == 0: the two levels never mix
  bool crossing_in_window = true;
  std::vector<std::string> warnings;
};

/// Integrates the (k, -k) pair through the ramp, starting in the instantaneous
/// ground state at t_start, using exact two-level propagators with the field
/// sampled at each step midpoint.
///
/// The pair Hamiltonian on {|00>, |11>} is 2 [ -(cos k - B) Z + alpha sin k X ],
/// i.e. the quasiparticle energies of the spin chain are 2 Lambda_k.
///
/// Throws std::invalid_argument if dt * max ||H|| >= 0.1.
EvolveResult evolve_mode(double k, double alpha, const QuenchSchedule& schedule, double dt);

/// Largest step satisfying the stability requirement with a margin of two.
double suggested_step(double k, double alpha, const QuenchSchedule& schedule);

}  // namespace xyq
