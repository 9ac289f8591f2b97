#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xyquench/csv.hpp"

// Sweep drivers behind the command-line subcommands. Each returns complete
// tables; nothing here touches the filesystem.

namespace xyq::sweeps {

/// An emitted value broke a range invariant (phase outside [0, 2 pi], negative derivative).
class InvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Axis {
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  /// count >= 2 evenly spaced points, both ends included.
  std::vector<double> points() const;
};

struct RgInit {
  double alpha = 0.0;
  double K = 1.0;
};

struct SweepConfig {
  // shared
  int n_sites = 100;
  std::optional<double> k;  // defaults to pi / n_sites
  double alpha = 0.5;
  std::vector<double> tau_q{1.0, 2.0, 5.0, 10.0};
  Axis t_over_tauq{-3.0, 0.0, 600};
  std::uint64_t seed = 20240917;
  unsigned threads = 1;

  // fig2
  Axis alpha_axis{0.0, 1.0, 200};

  // quench
  double safety_factor = 10.0;
  bool evolve_check = false;

  // rg
  std::vector<RgInit> rg_inits{{0.0, 0.3}, {0.1, 1.0}, {0.1, 0.3}};
  double l_max = 10.0;
  double dl = 1e-3;
  double alpha_cap = 1e3;
  int every = 1;
  double band = 0.5;
  double ferro_field = 1.0;
  double cutoff = 1.0;
  double field = 0.0;  // rg: quench field for the phase label; noncontract: B

  // noncontract
  std::vector<double> scan_alphas{1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<int> scan_sizes{100, 1000, 10000};

  // oracle
  int mode_cases = 20;
  int mode_steps = 10000;
  int many_body_cases = 4;
  int loop_steps = 1000;
  int spectrum_cases = 20;
  std::optional<double> tolerance;  // overrides every per-kind tolerance

  double resolved_k() const;
  void validate() const;
};

csv::Table run_fig1(const SweepConfig& config);

struct Fig2Tables {
  csv::Table gamma;
  csv::Table derivative;
};
Fig2Tables run_fig2(const SweepConfig& config);

struct QuenchTables {
  csv::Table summary;
  csv::Table modes;
};
QuenchTables run_quench(const SweepConfig& config);

csv::Table run_rg(const SweepConfig& config);

csv::Table run_noncontract(const SweepConfig& config);

struct OracleReport {
  csv::Table table;
  int failures = 0;
  int exceptions = 0;  // documented, non-failing deviations (parity sector)
};
OracleReport run_oracle(const SweepConfig& config);

inline constexpr double kModeOracleTolerance = 1e-4;
inline constexpr double kLoopOracleTolerance = 1e-3;
inline constexpr double kSpectrumTolerance = 1e-10;

}  // namespace xyq::sweeps
