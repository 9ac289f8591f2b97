#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace xyq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when a quantity is evaluated at a gapless point (Lambda_k = 0),
/// where the Bogoliubov angle is 0/0.
class DegeneratePointError : public std::domain_error {
public:
  DegeneratePointError(double k, double field, double alpha);

  double k() const noexcept { return k_; }
  double field() const noexcept { return field_; }
  double alpha() const noexcept { return alpha_; }

private:
  double k_;
  double field_;
  double alpha_;
};

/// Periodic anisotropic XY chain of an even number of spins.
///
/// Energies everywhere are in units of the exchange coupling. `phi` is the
/// z-rotation angle applied to every spin; it leaves the spectrum unchanged.
struct ChainSpec {
  int n_sites = 2;
  double alpha = 0.0;
  double phi = 0.0;

  /// Throws std::invalid_argument unless n_sites is even, >= 2, and alpha >= 0.
  static ChainSpec make(int n_sites, double alpha, double phi = 0.0);
  void validate() const;

  int pair_count() const noexcept { return n_sites / 2; }
};

/// One positive pseudomomentum with its quasiparticle gap and Bogoliubov angle.
struct Mode {
  double k = 0.0;
  double lambda_k = 0.0;
  double cos_theta_k = 0.0;
};

/// Positive half-integer pseudomomenta k = (2m-1) pi / N, m = 1..N/2, increasing.
std::vector<double> momentum_grid(int n_sites);
std::vector<double> momentum_grid(const ChainSpec& spec);

/// Lambda_k = sqrt((cos k - B)^2 + alpha^2 sin^2 k).
double dispersion(double k, double field, double alpha);

/// cos(theta_k) = (cos k - B) / Lambda_k. Throws DegeneratePointError when Lambda_k = 0.
double bogoliubov_angle(double k, double field, double alpha);

Mode make_mode(double k, double field, double alpha);

namespace detail {

// Shared arithmetic so that the batch kernels and the scalar API round identically.
inline double gap_squared(double cos_k, double sin_k, double field, double alpha) {
  const double x = cos_k - field;
  const double g = alpha * sin_k;
  return x * x + g * g;
}

}  // namespace detail

}  // namespace xyq
