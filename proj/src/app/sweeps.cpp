#include "xyquench/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "xyquench/chain.hpp"
#include "xyquench/ed.hpp"
#include "xyquench/geophase.hpp"
#include "xyquench/kernels.hpp"
#include "xyquench/parallel.hpp"
#include "xyquench/quench.hpp"
#include "xyquench/rg.hpp"

namespace xyq::sweeps {

std::vector<double> Axis::points() const {
  if (count < 2 || !std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw std::invalid_argument("axis needs finite min < max and count >= 2");
  }
  std::vector<double> pts(static_cast<std::size_t>(count));
  const double step = (max - min) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    pts[static_cast<std::size_t>(i)] = min + step * static_cast<double>(i);
  }
  pts.back() = max;
  return pts;
}

double SweepConfig::resolved_k() const {
  return k.value_or(kPi / static_cast<double>(n_sites));
}

void SweepConfig::validate() const {
  ChainSpec::make(n_sites, alpha);
  if (tau_q.empty()) {
    throw std::invalid_argument("at least one tau_q is required");
  }
  for (double t : tau_q) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument("tau_q values must be finite and >= 0");
    }
  }
  t_over_tauq.points();
  if (t_over_tauq.max > 0.0) {
    throw std::invalid_argument("the ramp is defined for t <= 0");
  }
  if (threads == 0) {
    throw std::invalid_argument("threads must be >= 1");
  }
  if (every < 1) {
    throw std::invalid_argument("every must be >= 1");
  }
}

namespace {

void check_phase_range(double gamma) {
  if (!std::isnan(gamma) && !(gamma >= 0.0 && gamma <= kTwoPi)) {
    throw InvariantViolation("geometric phase outside [0, 2 pi]: " + csv::format_double(gamma));
  }
}

void check_derivative(double d) {
  if (!std::isnan(d) && !(d >= 0.0)) {
    throw InvariantViolation("negative dGamma/dB: " + csv::format_double(d));
  }
}

std::vector<double> ramp_fields(const std::vector<double>& u, double tau_q) {
  std::vector<double> fields(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    fields[i] = field_at(u[i] * tau_q, tau_q);
  }
  return fields;
}

double positive_tau(const SweepConfig& config) {
  for (double t : config.tau_q) {
    if (!(t > 0.0)) {
      throw std::invalid_argument("this command needs tau_q > 0");
    }
  }
  return config.tau_q.front();
}

// Portable uniform double in [0, 1) from a 64-bit engine.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

csv::Table run_fig1(const SweepConfig& config) {
  config.validate();
  positive_tau(config);
  const double k = config.resolved_k();
  const double cos_k = std::cos(k);
  const double sin_k = std::sin(k);
  const std::vector<double> u = config.t_over_tauq.points();

  std::vector<double> alphas{config.alpha};
  if (config.alpha != 0.0) {
    alphas.push_back(0.0);
  }

  csv::Table table;
  table.header = {"t_over_tauq", "tau_q", "alpha", "gamma_k"};
  std::vector<double> gamma(u.size());
  for (double alpha : alphas) {
    for (double tau_q : config.tau_q) {
      const std::vector<double> fields = ramp_fields(u, tau_q);
      kernels::phase_over_fields(cos_k, sin_k, alpha, fields, gamma);
      for (std::size_t i = 0; i < u.size(); ++i) {
        check_phase_range(gamma[i]);
        table.add_row({u[i], tau_q, alpha, csv::real_or_missing(gamma[i])});
      }
    }
  }
  return table;
}

Fig2Tables run_fig2(const SweepConfig& config) {
  config.validate();
  const double tau_q = positive_tau(config);
  const double k = config.resolved_k();
  const double cos_k = std::cos(k);
  const double sin_k = std::sin(k);
  const std::vector<double> u = config.t_over_tauq.points();
  const std::vector<double> alphas = config.alpha_axis.points();
  if (alphas.front() < 0.0) {
    throw std::invalid_argument("alpha axis must be non-negative");
  }
  const std::vector<double> fields = ramp_fields(u, tau_q);

  std::vector<std::vector<double>> gamma(alphas.size(), std::vector<double>(u.size()));
  std::vector<std::vector<double>> deriv(alphas.size(), std::vector<double>(u.size()));
  parallel_for(alphas.size(), config.threads, [&](std::size_t a) {
    kernels::phase_over_fields(cos_k, sin_k, alphas[a], fields, gamma[a]);
    kernels::dphase_over_fields(cos_k, sin_k, alphas[a], fields, deriv[a]);
  });

  Fig2Tables out;
  out.gamma.header = {"alpha", "t_over_tauq", "gamma_k"};
  out.derivative.header = {"alpha", "t_over_tauq", "dgamma_dB"};
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      check_phase_range(gamma[a][i]);
      check_derivative(deriv[a][i]);
      out.gamma.add_row({alphas[a], u[i], csv::real_or_missing(gamma[a][i])});
      out.derivative.add_row({alphas[a], u[i], csv::real_or_missing(deriv[a][i])});
    }
  }
  return out;
}

QuenchTables run_quench(const SweepConfig& config) {
  config.validate();
  const ChainSpec spec = ChainSpec::make(config.n_sites, config.alpha);
  const std::vector<double> ks = momentum_grid(spec);

  QuenchTables out;
  out.summary.header = {"tau_q", "n_sites", "kink_count", "threshold", "safety_factor", "adiabatic"};
  out.modes.header = {"tau_q", "k", "p_k"};
  if (config.evolve_check) {
    out.modes.header.emplace_back("p_numeric");
  }

  for (double tau_q : config.tau_q) {
    const KinkReport report = kink_count(spec, tau_q, config.safety_factor);
    out.summary.add_row({tau_q, static_cast<std::int64_t>(spec.n_sites), report.kink_count,
                         report.threshold, report.safety_factor,
                         std::string(report.adiabatic ? "true" : "false")});

    std::vector<double> numeric;
    if (config.evolve_check) {
      if (!(tau_q > 0.0)) {
        throw std::invalid_argument("the numeric cross-check needs tau_q > 0");
      }
      numeric.resize(ks.size());
      const QuenchSchedule schedule = QuenchSchedule::make(tau_q);
      parallel_for(ks.size(), config.threads, [&](std::size_t i) {
        const double dt = suggested_step(ks[i], config.alpha, schedule);
        numeric[i] = evolve_mode(ks[i], config.alpha, schedule, dt).probability;
      });
    }
    const std::size_t pairs = ks.size();
    for (std::size_t j = 0; j < report.per_mode_p.size(); ++j) {
      const auto& mp = report.per_mode_p[j];
      std::vector<csv::Cell> row{tau_q, mp.k, mp.p};
      if (config.evolve_check) {
        // per_mode_p runs -k_max..-k0, k0..k_max; the pair shares one evolution.
        const std::size_t idx = j < pairs ? pairs - 1 - j : j - pairs;
        row.emplace_back(numeric[idx]);
      }
      out.modes.add_row(std::move(row));
    }
  }
  return out;
}

csv::Table run_rg(const SweepConfig& config) {
  if (config.every < 1) {
    throw std::invalid_argument("every must be >= 1");
  }
  if (config.rg_inits.empty()) {
    throw std::invalid_argument("at least one initial condition is required");
  }
  const PhaseCriteria criteria{config.band, config.ferro_field};
  std::vector<RGTrajectory> trajectories(config.rg_inits.size());
  std::vector<std::string> labels(config.rg_inits.size());
  for (std::size_t r = 0; r < config.rg_inits.size(); ++r) {
    const RgInit& init = config.rg_inits[r];
    labels[r] = std::string(to_string(classify_phase(init.K, init.alpha, config.field, config.cutoff, criteria)));
  }
  parallel_for(config.rg_inits.size(), config.threads, [&](std::size_t r) {
    const RgInit& init = config.rg_inits[r];
    trajectories[r] = rg_flow(RGState{init.alpha, init.K, 0.0}, config.l_max, config.dl, config.alpha_cap);
  });

  csv::Table table;
  table.header = {"run", "l", "alpha", "K", "status", "phase"};
  for (std::size_t r = 0; r < trajectories.size(); ++r) {
    const auto& states = trajectories[r].states;
    const std::string status(to_string(trajectories[r].status));
    for (std::size_t i = 0; i < states.size(); ++i) {
      const bool last = i + 1 == states.size();
      if (i % static_cast<std::size_t>(config.every) != 0 && !last) {
        continue;
      }
      table.add_row({static_cast<std::int64_t>(r), states[i].l, states[i].alpha, states[i].K, status,
                     labels[r]});
    }
  }
  return table;
}

csv::Table run_noncontract(const SweepConfig& config) {
  const std::vector<ScanRow> rows = noncontractibility_scan(config.field, config.scan_alphas, config.scan_sizes);
  csv::Table table;
  table.header = {"alpha", "n_sites", "gamma_g_over_M"};
  for (const auto& row : rows) {
    check_phase_range(row.gamma_over_pairs);
    table.add_row({row.alpha, static_cast<std::int64_t>(row.n_sites), row.gamma_over_pairs});
  }
  return table;
}

namespace {

struct OracleCase {
  std::string kind;
  int n_sites = 0;
  double k = 0.0;
  double field = 0.0;
  double alpha = 0.0;
  double phi = 0.0;
};

struct OracleOutcome {
  double analytic = 0.0;
  double numeric = 0.0;
  double diff = 0.0;
  std::string flag;
};

}  // namespace

OracleReport run_oracle(const SweepConfig& config) {
  if (config.mode_steps < 100 || config.loop_steps < 100) {
    throw std::invalid_argument("loop resolutions must be >= 100");
  }
  if (config.tolerance && !(*config.tolerance >= 0.0)) {
    throw std::invalid_argument("tolerance must be >= 0");
  }
  if (config.threads == 0) {
    throw std::invalid_argument("threads must be >= 1");
  }
  std::mt19937_64 rng(config.seed);
  std::vector<OracleCase> cases;

  for (int i = 0; i < config.mode_cases; ++i) {
    OracleCase c{"mode_loop"};
    do {
      c.k = uniform(rng, 0.05, kPi - 0.05);
      c.field = uniform(rng, -2.0, 2.0);
      c.alpha = uniform(rng, 0.0, 2.0);
    } while (dispersion(c.k, c.field, c.alpha) < 1e-2);
    cases.push_back(c);
  }
  cases.push_back({"many_body_loop", 6, 0.0, 0.5, 1.0});
  cases.push_back({"many_body_loop", 4, 0.0, 0.0, 0.5});
  for (int n : {4, 6}) {
    for (int i = 0; i < config.many_body_cases; ++i) {
      OracleCase c{"many_body_loop", n};
      c.alpha = uniform(rng, 0.2, 1.5);
      c.field = uniform(rng, -1.5, 1.5);
      cases.push_back(c);
    }
  }
  for (int i = 0; i < config.spectrum_cases; ++i) {
    OracleCase c{"spectrum_phi", 6};
    c.alpha = uniform(rng, 0.0, 2.0);
    c.field = uniform(rng, -2.0, 2.0);
    c.phi = uniform(rng, 0.0, kTwoPi);
    cases.push_back(c);
  }

  std::vector<OracleOutcome> outcomes(cases.size());
  parallel_for(cases.size(), config.threads, [&](std::size_t i) {
    const OracleCase& c = cases[i];
    OracleOutcome& o = outcomes[i];
    if (c.kind == "mode_loop") {
      const double tol = config.tolerance.value_or(kModeOracleTolerance);
      o.analytic = mode_phase(c.k, c.field, c.alpha);
      o.numeric = ed::mode_berry_numeric(c.k, c.field, c.alpha, config.mode_steps).phase;
      o.diff = std::abs(o.analytic - o.numeric);
      o.flag = o.diff <= tol ? "pass" : "fail";
    } else if (c.kind == "many_body_loop") {
      const double tol = config.tolerance.value_or(kLoopOracleTolerance);
      o.analytic = std::fmod(total_phase(ChainSpec::make(c.n_sites, c.alpha), c.field), kTwoPi);
      const ed::LoopResult loop = ed::berry_phase_loop(c.n_sites, c.alpha, c.field, config.loop_steps);
      o.numeric = loop.phase;
      o.diff = circular_distance(o.analytic, o.numeric);
      if (!loop.valid) {
        o.flag = "degenerate_loop";
      } else if (loop.parity < 0.0) {
        // Odd fermion parity: the ground state lives on the integer-momentum grid.
        o.flag = "odd_parity_sector";
      } else {
        o.flag = o.diff <= tol ? "pass" : "fail";
      }
    } else {
      const double tol = config.tolerance.value_or(kSpectrumTolerance);
      const Eigen::VectorXd base = ed::spectrum(ed::build_hamiltonian(c.n_sites, c.alpha, c.field, 0.0));
      const Eigen::VectorXd rotated = ed::spectrum(ed::build_hamiltonian(c.n_sites, c.alpha, c.field, c.phi));
      o.analytic = 0.0;
      o.numeric = (base - rotated).cwiseAbs().maxCoeff();
      o.diff = o.numeric;
      o.flag = o.diff <= tol ? "pass" : "fail";
    }
  });

  OracleReport report;
  report.table.header = {"case_id", "kind", "n_sites", "k", "B", "alpha", "phi",
                         "analytic", "numeric", "abs_diff", "flag"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const OracleCase& c = cases[i];
    const OracleOutcome& o = outcomes[i];
    report.table.add_row({static_cast<std::int64_t>(i), c.kind, static_cast<std::int64_t>(c.n_sites), c.k,
                          c.field, c.alpha, c.phi, o.analytic, o.numeric, o.diff, o.flag});
    if (o.flag == "fail") {
      ++report.failures;
    } else if (o.flag != "pass") {
      ++report.exceptions;
    }
  }
  return report;
}

}  // namespace xyq::sweeps
