#include "xyquench/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "xyquench/chain.hpp"

namespace xyq::ed {

namespace {

using cplx = std::complex<double>;

double reduce_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  return r >= kTwoPi ? 0.0 : r;
}

int spin_sum(unsigned basis, int n_sites) {
  return n_sites - 2 * std::popcount(basis);
}

}  // namespace

DenseHamiltonian build_hamiltonian(int n_sites, double alpha, double field, double phi,
                                   Boundary boundary) {
  if (n_sites < 2 || n_sites > kMaxSites) {
    throw std::invalid_argument("dense Hamiltonian needs 2 <= n_sites <= " +
                                std::to_string(kMaxSites));
  }
  const unsigned dim = 1u << n_sites;
  DenseHamiltonian h{n_sites, Eigen::MatrixXcd::Zero(dim, dim)};

  // Flipping a parallel pair changes sum sigma^z by -+4, so the rotation only
  // ever contributes exp(-+2 i phi).
  const cplx lower = std::polar(1.0, -2.0 * phi);  // up-up -> down-down
  const cplx raise = std::conj(lower);

  const int bonds = boundary == Boundary::periodic ? n_sites : n_sites - 1;
  for (unsigned s = 0; s < dim; ++s) {
    h.matrix(s, s) = field * static_cast<double>(spin_sum(s, n_sites));
    for (int i = 0; i < bonds; ++i) {
      const int j = (i + 1) % n_sites;
      const unsigned bi = (s >> i) & 1u;
      const unsigned bj = (s >> j) & 1u;
      const unsigned t = s ^ ((1u << i) | (1u << j));
      if (bi != bj) {
        h.matrix(t, s) += 1.0;
      } else if (bi == 0u) {
        h.matrix(t, s) += alpha * lower;
      } else {
        h.matrix(t, s) += alpha * raise;
      }
    }
  }
  return h;
}

GroundState ground_state(const DenseHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  GroundState gs;
  gs.energy = values(0);
  gs.vector = solver.eigenvectors().col(0);
  gs.gap = values.size() > 1 ? values(1) - values(0) : 0.0;
  const double scale = std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
  gs.degenerate = values.size() > 1 && gs.gap < 1e-8 * scale;
  gs.residual = (h.matrix * gs.vector - gs.energy * gs.vector).norm();
  return gs;
}

Eigen::VectorXd spectrum(const DenseHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double parity(const Eigen::VectorXcd& state, int n_sites) {
  (void)n_sites;
  double p = 0.0;
  for (Eigen::Index s = 0; s < state.size(); ++s) {
    const double w = std::norm(state(s));
    p += (std::popcount(static_cast<unsigned>(s)) % 2 == 0) ? w : -w;
  }
  return p;
}

double total_sz(const Eigen::VectorXcd& state, int n_sites) {
  double m = 0.0;
  for (Eigen::Index s = 0; s < state.size(); ++s) {
    m += std::norm(state(s)) * spin_sum(static_cast<unsigned>(s), n_sites);
  }
  return m;
}

double wilson_loop_phase(std::span<const Eigen::VectorXcd> states, double* overlaps_min) {
  if (states.size() < 2) {
    throw std::invalid_argument("a loop needs at least two states");
  }
  cplx product(1.0, 0.0);
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < states.size(); ++j) {
    const auto& next = states[(j + 1) % states.size()];
    const cplx overlap = states[j].dot(next);  // conjugates the left operand
    const double magnitude = std::abs(overlap);
    smallest = std::min(smallest, magnitude);
    if (magnitude > 0.0) {
      product *= overlap / magnitude;
    }
  }
  if (overlaps_min != nullptr) {
    *overlaps_min = smallest;
  }
  return reduce_two_pi(-std::arg(product));
}

LoopResult berry_phase_loop(int n_sites, double alpha, double field, int steps, Boundary boundary) {
  if (steps < 100) {
    throw std::invalid_argument("berry_phase_loop needs at least 100 steps");
  }
  std::vector<Eigen::VectorXcd> states;
  states.reserve(static_cast<std::size_t>(steps));
  LoopResult result;
  result.phi_steps = steps;
  result.min_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < steps; ++j) {
    const double phi = kPi * static_cast<double>(j) / static_cast<double>(steps);
    const GroundState gs = ground_state(build_hamiltonian(n_sites, alpha, field, phi, boundary));
    result.min_gap = std::min(result.min_gap, gs.gap);
    result.degenerate = result.degenerate || gs.degenerate;
    if (j == 0) {
      result.parity = parity(gs.vector, n_sites);
    }
    states.push_back(gs.vector);
  }
  result.phase = wilson_loop_phase(states, &result.overlaps_min);
  result.valid = !result.degenerate && result.overlaps_min >= 1e-6;
  return result;
}

ModeLoopResult mode_berry_numeric(double k, double field, double alpha, int steps) {
  if (steps < 100) {
    throw std::invalid_argument("mode_berry_numeric needs at least 100 steps");
  }
  const double x = std::cos(k) - field;
  const double g = alpha * std::sin(k);
  if (x * x + g * g == 0.0) {
    throw DegeneratePointError(k, field, alpha);
  }

  auto pair_ground_state = [&](double phi) {
    // Bloch azimuth of the paired state cos|00> - i e^{-2 i phi} sin|11>.
    const double chi = -0.5 * kPi - 2.0 * phi;
    Eigen::Matrix2cd h;
    h(0, 0) = -x;
    h(1, 1) = x;
    h(1, 0) = -g * std::polar(1.0, chi);
    h(0, 1) = std::conj(h(1, 0));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
    return Eigen::Vector2cd(solver.eigenvectors().col(0));
  };

  std::vector<Eigen::VectorXcd> raw;
  std::vector<Eigen::Vector2cd> aligned;
  raw.reserve(static_cast<std::size_t>(steps));
  aligned.reserve(static_cast<std::size_t>(steps));
  const Eigen::Vector2cd reference = pair_ground_state(0.0);
  for (int j = 0; j < steps; ++j) {
    const double phi = kPi * static_cast<double>(j) / static_cast<double>(steps);
    const Eigen::Vector2cd v = pair_ground_state(phi);
    raw.emplace_back(v);
    Eigen::Vector2cd rotated = reference;
    rotated(1) *= std::polar(1.0, -2.0 * phi);
    const cplx a = rotated.dot(v);
    aligned.push_back(v * (std::abs(a) > 0.0 ? std::conj(a) / std::abs(a) : cplx(1.0)));
  }

  ModeLoopResult result;
  result.phi_steps = steps;
  result.overlaps_min = std::numeric_limits<double>::infinity();
  double accumulated = 0.0;
  for (int j = 0; j < steps; ++j) {
    const cplx overlap = aligned[static_cast<std::size_t>(j)].dot(
        aligned[static_cast<std::size_t>((j + 1) % steps)]);
    result.overlaps_min = std::min(result.overlaps_min, std::abs(overlap));
    accumulated -= std::arg(overlap);
  }
  result.phase = accumulated;
  result.reduced_phase = wilson_loop_phase(raw);
  return result;
}

}  // namespace xyq::ed
