#include "xyquench/rg.hpp"

#include <cmath>
#include <stdexcept>

namespace xyq {

RGDerivative rg_rhs(const RGState& s) {
  return RGDerivative{(2.0 - 1.0 / s.K) * s.alpha, s.alpha * s.alpha / 4.0};
}

std::string_view to_string(FlowStatus status) {
  switch (status) {
    case FlowStatus::completed:
      return "completed";
    case FlowStatus::strong_coupling:
      return "strong_coupling";
  }
  return "unknown";
}

namespace {

RGState rk4_step(const RGState& s, double h) {
  auto shifted = [&](const RGDerivative& d, double scale) {
    return RGState{s.alpha + scale * d.dalpha, s.K + scale * d.dK, s.l};
  };
  const RGDerivative k1 = rg_rhs(s);
  const RGDerivative k2 = rg_rhs(shifted(k1, 0.5 * h));
  const RGDerivative k3 = rg_rhs(shifted(k2, 0.5 * h));
  const RGDerivative k4 = rg_rhs(shifted(k3, h));
  return RGState{s.alpha + h / 6.0 * (k1.dalpha + 2.0 * k2.dalpha + 2.0 * k3.dalpha + k4.dalpha),
                 s.K + h / 6.0 * (k1.dK + 2.0 * k2.dK + 2.0 * k3.dK + k4.dK), s.l + h};
}

}  // namespace

RGTrajectory rg_flow(const RGState& initial, double l_max, double dl, double alpha_cap) {
  if (!(dl > 0.0)) {
    throw std::invalid_argument("dl must be > 0");
  }
  if (!(initial.K > 0.0) || !(initial.alpha >= 0.0) || !(initial.l >= 0.0)) {
    throw std::invalid_argument("initial RG state needs K > 0, alpha >= 0, l >= 0");
  }
  if (!(l_max > initial.l)) {
    throw std::invalid_argument("l_max must exceed the initial scale");
  }

  const double span = l_max - initial.l;
  // Tolerate round-off so that span = n * dl yields exactly n steps.
  const auto steps = static_cast<long>(std::ceil(span / dl * (1.0 - 1e-12)));

  RGTrajectory traj;
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.push_back(initial);
  RGState s = initial;
  for (long n = 0; n < steps; ++n) {
    const double h = (n + 1 == steps) ? l_max - s.l : dl;
    s = rk4_step(s, h);
    // Grid positions from the step index, so l does not drift by summation.
    s.l = (n + 1 == steps) ? l_max : initial.l + dl * static_cast<double>(n + 1);
    traj.states.push_back(s);
    if (!(s.alpha <= alpha_cap) || !(s.K > 0.0)) {
      traj.status = FlowStatus::strong_coupling;
      break;
    }
  }
  return traj;
}

double mass_gap(double alpha, double K, double cutoff) {
  if (!(K > 0.5)) {
    throw std::invalid_argument("mass gap needs K > 1/2 (coupling irrelevant otherwise)");
  }
  if (!(alpha > 0.0) || !(cutoff > 0.0)) {
    throw std::invalid_argument("mass gap needs alpha > 0 and cutoff > 0");
  }
  return cutoff * std::pow(alpha / 2.0, 1.0 / (2.0 - 1.0 / K));
}

std::string_view to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::LuttingerLiquid:
      return "luttinger_liquid";
    case PhaseLabel::StaggeredOrder:
      return "staggered_order";
    case PhaseLabel::Ferromagnetic:
      return "ferromagnetic";
  }
  return "unknown";
}

PhaseLabel classify_phase(double K, double alpha, double field, double cutoff,
                          const PhaseCriteria& criteria) {
  if (!(K > 0.0) || !(alpha >= 0.0) || !(field >= 0.0) || !(cutoff > 0.0)) {
    throw std::invalid_argument("classify_phase needs K > 0, alpha >= 0, B >= 0, cutoff > 0");
  }
  if (!(criteria.band > 0.0 && criteria.band < 1.0) || !(criteria.ferro_field > 0.0)) {
    throw std::invalid_argument("band must lie in (0, 1) and ferro_field must be > 0");
  }
  if (K <= 0.5) {
    return field > criteria.ferro_field ? PhaseLabel::Ferromagnetic : PhaseLabel::LuttingerLiquid;
  }
  // Without the sine-Gordon term there is no gap to compare against.
  const double gap = alpha > 0.0 ? mass_gap(alpha, K, cutoff) : 0.0;
  if (field > (1.0 + criteria.band) * gap) {
    return PhaseLabel::Ferromagnetic;
  }
  if (std::abs(field - gap) <= criteria.band * gap) {
    return PhaseLabel::LuttingerLiquid;
  }
  return PhaseLabel::StaggeredOrder;
}

}  // namespace xyq
