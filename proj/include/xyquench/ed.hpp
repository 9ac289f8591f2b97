#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

// Exact-diagonalization oracle: the full 2^N spin Hamiltonian of the rotated
// chain and discretized Berry-phase loops over the rotation angle.

namespace xyq::ed {

inline constexpr int kMaxSites = 12;

enum class Boundary { periodic, open };

/// H_phi = U(phi) H U(phi)^dagger with U(phi) = prod_j exp(i phi sigma^z_j / 2) and
/// H = sum_i [(1+alpha)/2 sx_i sx_{i+1} + (1-alpha)/2 sy_i sy_{i+1} + B sz_i].
///
/// Basis index bit j set means spin j points down (sigma^z_j = -1).
struct DenseHamiltonian {
  int n_sites = 0;
  Eigen::MatrixXcd matrix;

  Eigen::Index dimension() const { return matrix.rows(); }
};

/// Throws std::invalid_argument unless 2 <= n_sites <= kMaxSites.
DenseHamiltonian build_hamiltonian(int n_sites, double alpha, double field, double phi,
                                   Boundary boundary = Boundary::periodic);

struct GroundState {
  double energy = 0.0;
  double gap = 0.0;  // E1 - E0
  Eigen::VectorXcd vector;
  double residual = 0.0;  // ||H v - E v||
  bool degenerate = false;
};

/// Dense Hermitian eigensolve. Flags degeneracy when E1 - E0 < 1e-8 ||H||.
/// Throws std::runtime_error if the solver does not converge.
GroundState ground_state(const DenseHamiltonian& h);

Eigen::VectorXd spectrum(const DenseHamiltonian& h);

/// <prod_j sigma^z_j>, the Jordan-Wigner fermion parity (+1: even).
double parity(const Eigen::VectorXcd& state, int n_sites);

/// Mean of sum_j sigma^z_j.
double total_sz(const Eigen::VectorXcd& state, int n_sites);

/// gamma = -arg prod_j <psi_j | psi_{j+1}> over the closed list (last -> first),
/// reduced to [0, 2 pi). Invariant under per-state phase changes.
double wilson_loop_phase(std::span<const Eigen::VectorXcd> states, double* overlaps_min = nullptr);

struct LoopResult {
  int phi_steps = 0;
  double phase = 0.0;  // [0, 2 pi)
  double overlaps_min = 0.0;
  double min_gap = 0.0;
  double parity = 0.0;  // ground-state fermion parity at phi = 0
  bool degenerate = false;
  bool valid = false;
};

/// Many-body ground-state holonomy as phi runs over [0, pi].
/// The result is invalid when the ground state is degenerate anywhere on the
/// loop or a consecutive overlap drops below 1e-6.
LoopResult berry_phase_loop(int n_sites, double alpha, double field, int steps,
                            Boundary boundary = Boundary::periodic);

struct ModeLoopResult {
  int phi_steps = 0;
  double phase = 0.0;          // accumulated phase, in [0, 2 pi]
  double reduced_phase = 0.0;  // gauge-invariant holonomy in [0, 2 pi)
  double overlaps_min = 0.0;
};

/// Holonomy of one (k, -k) pair. At each phi the pair Hamiltonian on {|00>, |11>}
/// is diagonalized numerically; eigenvector phases are aligned with the rotated
/// phi = 0 state so the accumulated phase keeps its winding.
/// Throws DegeneratePointError at gapless points, std::invalid_argument for steps < 100.
ModeLoopResult mode_berry_numeric(double k, double field, double alpha, int steps);

}  // namespace xyq::ed
