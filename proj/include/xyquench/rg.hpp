#pragma once

#include <string_view>
#include <vector>

namespace xyq {

/// Running sine-Gordon coupling and Luttinger parameter at log scale l.
struct RGState {
  double alpha = 0.0;
  double K = 1.0;
  double l = 0.0;
};

struct RGDerivative {
  double dalpha = 0.0;
  double dK = 0.0;
};

/// d alpha/dl = (2 - 1/K) alpha,  dK/dl = alpha^2 / 4.
RGDerivative rg_rhs(const RGState& s);

enum class FlowStatus { completed, strong_coupling };

std::string_view to_string(FlowStatus status);

struct RGTrajectory {
  std::vector<RGState> states;  // states.front() is the initial condition
  FlowStatus status = FlowStatus::completed;
};

inline constexpr double kDefaultRgStep = 1e-3;
inline constexpr double kDefaultAlphaCap = 1e3;

/// Fixed-step classical RK4 from initial.l to l_max. The last step is shortened
/// to land on l_max. Stops early with FlowStatus::strong_coupling once alpha
/// exceeds alpha_cap; the first state past the cap is kept.
RGTrajectory rg_flow(const RGState& initial, double l_max, double dl = kDefaultRgStep,
                     double alpha_cap = kDefaultAlphaCap);

/// M = cutoff * (alpha/2)^{1/(2 - 1/K)}, defined for K > 1/2, alpha > 0, cutoff > 0.
double mass_gap(double alpha, double K, double cutoff);

enum class PhaseLabel { LuttingerLiquid, StaggeredOrder, Ferromagnetic };

std::string_view to_string(PhaseLabel label);

struct PhaseCriteria {
  double band = 0.5;           // |B - M| <= band * M counts as "of the order of the gap"
  double ferro_field = 1.0;    // K <= 1/2: field above which the liquid polarizes
};

/// Static and quench-field phase of the bosonized chain. B is the (non-negative)
/// quench field magnitude.
PhaseLabel classify_phase(double K, double alpha, double field, double cutoff,
                          const PhaseCriteria& criteria = {});

}  // namespace xyq
