// Command-line front end: sweeps for the geometric-phase figures, quench
// statistics, RG trajectories, the non-contractibility scan, and the
// exact-diagonalization oracle suite. All output is CSV.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "xyquench/kernels.hpp"
#include "xyquench/parallel.hpp"
#include "xyquench/sweeps.hpp"

namespace {

namespace fs = std::filesystem;
using xyq::sweeps::SweepConfig;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadArgs = 2;

struct Options {
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string simd = "auto";

  std::optional<int> n_sites;
  std::optional<double> alpha;
  std::optional<double> k;
  std::vector<double> tau_q;
  std::optional<double> tmin;
  std::optional<double> tmax;
  std::optional<int> samples;
  std::optional<double> band;
  std::optional<double> safety_factor;

  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<int> alpha_count;

  bool evolve = false;

  std::vector<std::string> inits;
  std::optional<double> l_max;
  std::optional<double> dl;
  std::optional<double> alpha_cap;
  std::optional<int> every;
  std::optional<double> cutoff;
  std::optional<double> ferro_field;
  std::optional<double> field;

  std::vector<double> scan_alphas;
  std::vector<int> scan_sizes;

  std::optional<double> tolerance;
  std::optional<int> mode_cases;
  std::optional<int> mode_steps;
  std::optional<int> mb_cases;
  std::optional<int> loop_steps;
  std::optional<int> spectrum_cases;
};

template <class T, class U>
void apply(const std::optional<T>& value, U& target) {
  if (value) {
    target = *value;
  }
}

xyq::sweeps::RgInit parse_init(const std::string& text) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) {
    throw std::invalid_argument("--init expects alpha:K, got '" + text + "'");
  }
  try {
    return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--init expects numbers, got '" + text + "'");
  }
}

SweepConfig make_config(const Options& o, const std::string& command) {
  SweepConfig c;
  if (command == "fig2") {
    c.t_over_tauq.count = 200;
  }
  if (command == "noncontract") {
    c.field = 0.5;
  }
  apply(o.seed, c.seed);
  c.threads = o.threads.value_or(xyq::default_thread_count());
  apply(o.n_sites, c.n_sites);
  apply(o.alpha, c.alpha);
  if (o.k) {
    c.k = *o.k;
  }
  if (!o.tau_q.empty()) {
    c.tau_q = o.tau_q;
  }
  apply(o.tmin, c.t_over_tauq.min);
  apply(o.tmax, c.t_over_tauq.max);
  apply(o.samples, c.t_over_tauq.count);
  apply(o.band, c.band);
  apply(o.safety_factor, c.safety_factor);
  apply(o.alpha_min, c.alpha_axis.min);
  apply(o.alpha_max, c.alpha_axis.max);
  apply(o.alpha_count, c.alpha_axis.count);
  c.evolve_check = o.evolve;
  if (!o.inits.empty()) {
    c.rg_inits.clear();
    for (const auto& s : o.inits) {
      c.rg_inits.push_back(parse_init(s));
    }
  }
  apply(o.l_max, c.l_max);
  apply(o.dl, c.dl);
  apply(o.alpha_cap, c.alpha_cap);
  apply(o.every, c.every);
  apply(o.cutoff, c.cutoff);
  apply(o.ferro_field, c.ferro_field);
  apply(o.field, c.field);
  if (!o.scan_alphas.empty()) {
    c.scan_alphas = o.scan_alphas;
  }
  if (!o.scan_sizes.empty()) {
    c.scan_sizes = o.scan_sizes;
  }
  c.tolerance = o.tolerance;
  apply(o.mode_cases, c.mode_cases);
  apply(o.mode_steps, c.mode_steps);
  apply(o.mb_cases, c.many_body_cases);
  apply(o.loop_steps, c.loop_steps);
  apply(o.spectrum_cases, c.spectrum_cases);
  return c;
}

fs::path sibling(const fs::path& primary, const std::string& suffix) {
  fs::path p = primary;
  p.replace_filename(primary.stem().string() + suffix + primary.extension().string());
  return p;
}

void write_table(const xyq::csv::Table& table, const std::optional<fs::path>& path) {
  if (!path) {
    xyq::csv::write(std::cout, table);
    return;
  }
  std::ofstream os(*path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot open " + path->string() + " for writing");
  }
  xyq::csv::write(os, table);
  if (!os) {
    throw std::runtime_error("failed writing " + path->string());
  }
}

int run(const std::string& command, const Options& o) {
  if (o.simd == "scalar") {
    xyq::kernels::set_simd_level(xyq::kernels::SimdLevel::scalar);
  } else if (o.simd == "avx2") {
    xyq::kernels::set_simd_level(xyq::kernels::SimdLevel::avx2);
  }
  const SweepConfig config = make_config(o, command);
  std::optional<fs::path> out;
  if (o.out && *o.out != "-") {
    out = fs::path(*o.out);
  }

  if (command == "fig1") {
    write_table(xyq::sweeps::run_fig1(config), out);
  } else if (command == "fig2") {
    const auto tables = xyq::sweeps::run_fig2(config);
    write_table(tables.gamma, out);
    if (out) {
      write_table(tables.derivative, sibling(*out, "_dgamma_dB"));
    } else {
      std::cerr << "note: derivative surface is written only with --out\n";
    }
  } else if (command == "quench") {
    const auto tables = xyq::sweeps::run_quench(config);
    write_table(tables.summary, out);
    if (out) {
      write_table(tables.modes, sibling(*out, "_modes"));
    } else {
      std::cerr << "note: per-mode table is written only with --out\n";
    }
  } else if (command == "rg") {
    write_table(xyq::sweeps::run_rg(config), out);
  } else if (command == "noncontract") {
    write_table(xyq::sweeps::run_noncontract(config), out);
  } else if (command == "oracle") {
    const auto report = xyq::sweeps::run_oracle(config);
    write_table(report.table, out);
    if (report.failures > 0) {
      for (const auto& row : report.table.rows) {
        if (std::get<std::string>(row.back()) == "fail") {
          std::cerr << "oracle failure: case " << std::get<std::int64_t>(row[0]) << " ("
                    << std::get<std::string>(row[1]) << ") |diff| = "
                    << xyq::csv::format_double(std::get<double>(row[9])) << '\n';
        }
      }
      std::cerr << report.failures << " oracle case(s) failed\n";
      return kExitFailure;
    }
    if (report.exceptions > 0) {
      std::cerr << report.exceptions << " case(s) flagged as documented exceptions\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric phases and linear-quench dynamics of the anisotropic XY chain"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values; command-line flags win");

  Options o;
  app.add_option("--out", o.out, "Output CSV path (stdout when omitted or -)");
  app.add_option("--seed", o.seed, "Random seed for oracle case sampling");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--simd", o.simd, "Kernel level")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.fallthrough();

  auto add_chain = [&](CLI::App* sub) {
    sub->add_option("--nsites", o.n_sites, "Number of spins N (even)");
    sub->add_option("--alpha", o.alpha, "Anisotropy alpha");
  };
  auto add_time_axis = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Momentum of the plotted mode (default pi/N)");
    sub->add_option("--tauq", o.tau_q, "Quench time(s); repeatable or comma separated")->delimiter(',');
    sub->add_option("--tmin", o.tmin, "Start of the t/tau_q axis");
    sub->add_option("--tmax", o.tmax, "End of the t/tau_q axis (<= 0)");
    sub->add_option("--samples", o.samples, "Points on the t/tau_q axis");
  };

  auto* fig1 = app.add_subcommand("fig1", "Gamma_k(t) for several quench times, alpha and alpha = 0");
  add_chain(fig1);
  add_time_axis(fig1);

  auto* fig2 = app.add_subcommand("fig2", "Gamma_k and dGamma_k/dB surfaces over (alpha, t)");
  add_chain(fig2);
  add_time_axis(fig2);
  fig2->add_option("--alpha-min", o.alpha_min);
  fig2->add_option("--alpha-max", o.alpha_max);
  fig2->add_option("--alpha-count", o.alpha_count);

  auto* quench = app.add_subcommand("quench", "Landau-Zener kink statistics and adiabatic threshold");
  add_chain(quench);
  quench->add_option("--tauq", o.tau_q, "Quench time(s)")->delimiter(',');
  quench->add_option("--safety-factor", o.safety_factor, "Adiabatic when tau_q > factor * N^2/(2 pi^3)");
  quench->add_flag("--evolve", o.evolve, "Add a numerically integrated probability column");

  auto* rg = app.add_subcommand("rg", "RG trajectories of (alpha, K)");
  rg->add_option("--init", o.inits, "Initial condition alpha:K; repeatable");
  rg->add_option("--lmax", o.l_max, "Final log scale");
  rg->add_option("--dl", o.dl, "RK4 step");
  rg->add_option("--alpha-cap", o.alpha_cap, "Strong-coupling cutoff on alpha");
  rg->add_option("--every", o.every, "Emit every n-th state");
  rg->add_option("--band", o.band, "Relative band around the mass gap");
  rg->add_option("--cutoff", o.cutoff, "Cutoff Lambda of the mass gap");
  rg->add_option("--field", o.field, "Quench field for the phase label");
  rg->add_option("--ferro-field", o.ferro_field, "Polarizing field for K <= 1/2");

  auto* noncontract = app.add_subcommand("noncontract", "Gamma_g / M as alpha -> 0 and N grows");
  noncontract->add_option("--field", o.field, "Field B in (-1, 1)");
  noncontract->add_option("--alphas", o.scan_alphas, "Anisotropies")->delimiter(',');
  noncontract->add_option("--sizes", o.scan_sizes, "Chain sizes")->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "Analytic phases against exact diagonalization");
  oracle->add_option("--tolerance", o.tolerance, "Override every comparison tolerance");
  oracle->add_option("--mode-cases", o.mode_cases);
  oracle->add_option("--mode-steps", o.mode_steps);
  oracle->add_option("--mb-cases", o.mb_cases, "Random many-body cases per size");
  oracle->add_option("--loop-steps", o.loop_steps);
  oracle->add_option("--spectrum-cases", o.spectrum_cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const xyq::sweeps::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
