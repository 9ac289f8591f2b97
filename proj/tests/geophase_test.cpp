#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "xyquench/geophase.hpp"

using namespace xyq;

namespace {

// Direct transcription of Gamma_k = pi (1 - cos theta_k), independent of the library path.
double gamma_reference(double k, double b, double a) {
  const double x = std::cos(k) - b;
  return kPi * (1.0 - x / std::sqrt(x * x + a * a * std::sin(k) * std::sin(k)));
}

}  // namespace

TEST_CASE("mode phase examples") {
  CHECK(mode_phase(0.0, 0.5, 0.7) == 0.0);          // cos theta = 1
  CHECK(mode_phase(0.0, 2.0, 0.0) == kTwoPi);       // cos theta = -1
  CHECK(mode_phase(kPi / 2, 0.5, 0.5) == doctest::Approx(kPi * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-14));
  CHECK(mode_phase(kPi / 2, 0.5, 0.5) == doctest::Approx(5.3630341).epsilon(1e-7));
  CHECK_THROWS_AS(mode_phase(0.3, std::cos(0.3), 0.0), DegeneratePointError);
}

TEST_CASE("mode phase at time examples") {
  const double k = 1.2;
  const double tau = 3.0;
  CHECK(mode_phase_at_time(k, -tau * std::cos(k), tau, 0.8) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(mode_phase_at_time(kPi / 2, 0.0, 7.0, 1.0) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(mode_phase_at_time(kPi / 2, -0.5 * 4.0, 4.0, 0.5) == mode_phase(kPi / 2, 0.5, 0.5));
  CHECK_THROWS_AS(mode_phase_at_time(k, 0.1, tau, 0.8), std::invalid_argument);
}

TEST_CASE("property: time form equals field form exactly") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> kd(0.0, kPi), td(-3.0, 0.0), taud(0.1, 50.0), ad(0.0, 2.0);
  int checked = 0;
  while (checked < 10000) {
    const double k = kd(rng), tau = taud(rng), t = td(rng) * tau, a = ad(rng);
    if (dispersion(k, -t / tau, a) == 0.0) {
      continue;
    }
    REQUIRE(mode_phase_at_time(k, t, tau, a) == mode_phase(k, -t / tau, a));
    ++checked;
  }
}

TEST_CASE("XX step rule") {
  CHECK(mode_phase_xx(0.4, -2.0 * 5.0, 5.0) == kTwoPi);
  CHECK(mode_phase_xx(2.9, -2.0, 1.0) == kTwoPi);
  CHECK(mode_phase_xx(kPi / 2, -0.1, 1.0) == kTwoPi);
  // k -> 0: the step sits at |t| = tau_q.
  const double k = 1e-4;
  CHECK(mode_phase_xx(k, -0.999, 1.0) == 0.0);
  CHECK(mode_phase_xx(k, -1.001, 1.0) == kTwoPi);
  CHECK_THROWS_AS(mode_phase_xx(kPi / 3, -std::cos(kPi / 3), 1.0), DegeneratePointError);
}

TEST_CASE("property: alpha = 0 and alpha = 1 collapse to the closed forms") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> kd(1e-3, kPi - 1e-3), ud(-3.0, 0.0);
  for (int i = 0; i < 5000; ++i) {
    const double k = kd(rng), t = ud(rng);
    if (-t == std::cos(k)) {
      continue;
    }
    CHECK(mode_phase_at_time(k, t, 1.0, 0.0) == mode_phase_xx(k, t, 1.0));
    CHECK(mode_phase_at_time(k, t, 1.0, 1.0) == doctest::Approx(mode_phase_ising(k, t, 1.0)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("XX step location is bracketed by the field grid") {
  for (double k : {0.05, 0.7, 1.5, 2.4}) {
    const int n = 3001;
    double prev = mode_phase(k, 3.0, 0.0);
    bool found = false;
    for (int i = 1; i < n; ++i) {
      const double b_prev = 3.0 - 4.0 * (i - 1) / (n - 1);
      const double b = 3.0 - 4.0 * i / (n - 1);
      if (b == std::cos(k)) {
        continue;
      }
      const double cur = mode_phase(k, b, 0.0);
      if (cur != prev) {
        CHECK(prev == kTwoPi);
        CHECK(cur == 0.0);
        CHECK(std::cos(k) < b_prev);
        CHECK(std::cos(k) > b);
        CHECK_FALSE(found);
        found = true;
      }
      prev = cur;
    }
    CHECK(found);
  }
}

TEST_CASE("derivative examples") {
  CHECK(dphase_dB(0.9, -0.3, 1.0, 0.0) == 0.0);
  CHECK(dphase_dB(0.0, -0.3, 1.0, 0.8) == 0.0);
  CHECK(dphase_dB(kPi, -0.3, 1.0, 0.8) == doctest::Approx(0.0).epsilon(1e-30).scale(1.0));
  CHECK(dphase_dB(kPi / 2, 0.0, 2.0, 1.0) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(dphase_dB(kPi / 2, -2.0, 2.0, 1.0) == doctest::Approx(kPi / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
  CHECK_THROWS_AS(dphase_dB(0.5, -std::cos(0.5), 1.0, 0.0), DegeneratePointError);
}

TEST_CASE("property: derivative matches central differences where the gap exceeds 0.1") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> kd(0.2, kPi - 0.2), ud(-3.0, 0.0), ad(0.25, 2.0);
  const double h = 1e-6;
  double worst = 0.0;
  int checked = 0;
  while (checked < 10000) {
    const double k = kd(rng), u = ud(rng), a = ad(rng);
    const double b = -u;
    if (dispersion(k, b, a) <= 0.1) {
      continue;
    }
    const double fd = (gamma_reference(k, b + h, a) - gamma_reference(k, b - h, a)) / (2.0 * h);
    const double exact = dphase_dB(k, u, 1.0, a);
    REQUIRE(exact >= 0.0);
    worst = std::max(worst, std::abs(fd - exact) / exact);
    ++checked;
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("property: phases are even in k and lie in [0, 2 pi]") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> kd(0.0, kPi), bd(-3.0, 3.0), ad(0.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const double k = kd(rng), b = bd(rng), a = ad(rng);
    if (dispersion(k, b, a) == 0.0) {
      continue;
    }
    const double g = mode_phase(k, b, a);
    REQUIRE(g >= 0.0);
    REQUIRE(g <= kTwoPi);
    CHECK(mode_phase(-k, b, a) == g);
    if (b >= 0.0) {
      CHECK(dphase_dB(-k, -b, 1.0, a) == dphase_dB(k, -b, 1.0, a));
    }
  }
}

TEST_CASE("total phase examples") {
  CHECK(total_phase(ChainSpec::make(2, 1.0), 0.0) == doctest::Approx(kPi).epsilon(1e-15));
  const ChainSpec n4 = ChainSpec::make(4, 1.0);
  CHECK(total_phase(n4, 0.0) == doctest::Approx(kTwoPi).epsilon(1e-14));
  const auto per_mode = mode_phases(n4, 0.0);
  CHECK(per_mode[0] == doctest::Approx(0.92015118).epsilon(1e-7));
  CHECK(per_mode[1] == doctest::Approx(5.36303413).epsilon(1e-8));
  CHECK(total_phase(ChainSpec::make(10, 0.8), 1e7) == doctest::Approx(5 * kTwoPi).epsilon(1e-9));
}

TEST_CASE("total phase names the gapless mode") {
  const ChainSpec spec = ChainSpec::make(4, 0.0);
  const double k0 = kPi / 4;
  try {
    total_phase(spec, std::cos(k0));
    FAIL("expected DegeneratePointError");
  } catch (const DegeneratePointError& e) {
    CHECK(e.k() == k0);
  }
}

TEST_CASE("property: additivity under an independent summation order") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> bd(-2.0, 2.0), ad(0.01, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ChainSpec spec = ChainSpec::make(2 * (1 + trial * 37), ad(rng));
    const double b = bd(rng);
    const auto ks = momentum_grid(spec);
    // Kahan sum from the top of the band down.
    double sum = 0.0, comp = 0.0;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
      const double y = gamma_reference(*it, b, spec.alpha) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    CHECK(total_phase(spec, b) == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("critical phase examples") {
  // B = 1 lies above cos k for every mode, so each XX pair carries 2 pi.
  CHECK(critical_phase(ChainSpec::make(50, 0.0), 3.0) == doctest::Approx(25 * kTwoPi).epsilon(1e-15));
  CHECK(critical_phase(ChainSpec::make(2, 1.0), 4.0) == doctest::Approx(kPi * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-14));
  CHECK(critical_phase(ChainSpec::make(2, 1.0), 4.0) == doctest::Approx(5.3630341).epsilon(1e-7));
  const ChainSpec stiff = ChainSpec::make(20, 1e9);
  const auto per_mode = mode_phases(stiff, 1.0);
  for (double g : per_mode) {
    CHECK(g == doctest::Approx(kPi).epsilon(1e-7));
  }
  for (double a : {0.0, 0.3, 1.0, 2.5}) {
    const ChainSpec spec = ChainSpec::make(30, a);
    CHECK(critical_phase(spec, 7.5) == total_phase(spec, 1.0));
  }
}

TEST_CASE("final phase examples") {
  const ChainSpec n4 = ChainSpec::make(4, 1.0);
  CHECK(final_phase(n4, {}) == total_phase(n4, 0.0));
  const std::vector<double> k0{kPi / 4};
  CHECK(final_phase(n4, k0) == doctest::Approx(5.36303413).epsilon(1e-8));
  const std::vector<double> minus_k0{-kPi / 4};
  CHECK(final_phase(n4, minus_k0) == final_phase(n4, k0));
  const std::vector<double> off_grid{0.3};
  CHECK_THROWS_AS(final_phase(n4, off_grid), std::invalid_argument);

  // alpha = 0, B = 0: retained modes give 2 pi where cos k < 0, else 0.
  const ChainSpec xx = ChainSpec::make(8, 0.0);
  const auto ks = momentum_grid(xx);
  const std::vector<double> drop{ks[0]};
  CHECK(final_phase(xx, drop) == 2 * kTwoPi);
}

TEST_CASE("phase summary excludes the likely-excited pair") {
  const ChainSpec spec = ChainSpec::make(20, 0.5);
  const QuenchSchedule fast = QuenchSchedule::make(0.5);
  const KinkReport fast_kinks = kink_count(spec, fast.tau_q);
  const PhaseSummary s = phase_summary(spec, fast, fast_kinks);
  CHECK_FALSE(s.excluded_modes.empty());
  CHECK(s.excluded_modes.front() == kPi / 20);
  CHECK(s.gamma_final == doctest::Approx(final_phase(spec, s.excluded_modes)));
  CHECK(s.gamma_critical == total_phase(spec, 1.0));
  CHECK(s.gamma_initial == total_phase(spec, 5.0));

  const QuenchSchedule slow = QuenchSchedule::make(1e4);
  const PhaseSummary adiabatic = phase_summary(spec, slow, kink_count(spec, slow.tau_q));
  CHECK(adiabatic.excluded_modes.empty());
  CHECK(adiabatic.gamma_final == total_phase(spec, 0.0));
}

TEST_CASE("non-contractibility scan") {
  const std::vector<double> alphas{1e-4};
  const std::vector<int> sizes{10000};
  const auto rows = noncontractibility_scan(0.5, alphas, sizes);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].gamma_over_pairs - 4.0 * kPi / 3.0) < 1e-2);
  CHECK(noncontractible_limit(0.5) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));

  const auto half = noncontractibility_scan(0.0, alphas, sizes);
  CHECK(half[0].gamma_over_pairs == doctest::Approx(kPi).epsilon(1e-10));

  const std::vector<double> big{10.0};
  CHECK(noncontractibility_scan(0.0, big, sizes)[0].gamma_over_pairs == doctest::Approx(kPi).epsilon(1e-10));

  // Brute-force reference sum for a field away from the symmetric point.
  const std::vector<int> small{100};
  double ref = 0.0;
  for (int m = 1; m <= 50; ++m) {
    ref += gamma_reference((2 * m - 1) * kPi / 100, 0.5, 10.0);
  }
  CHECK(noncontractibility_scan(0.5, big, small)[0].gamma_over_pairs == doctest::Approx(ref / 50).epsilon(1e-12));

  CHECK_THROWS_AS(noncontractibility_scan(1.0, alphas, sizes), std::domain_error);
  CHECK_THROWS_AS(noncontractibility_scan(-1.5, alphas, sizes), std::domain_error);
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(noncontractibility_scan(0.2, zero, sizes), std::invalid_argument);
}

TEST_CASE("scan approaches the limit as alpha shrinks and N grows") {
  const std::vector<double> alphas{1e-1, 1e-2, 1e-3};
  const std::vector<int> sizes{20000};
  const auto rows = noncontractibility_scan(-0.3, alphas, sizes);
  const double limit = noncontractible_limit(-0.3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(rows[i].gamma_over_pairs - limit) < std::abs(rows[i - 1].gamma_over_pairs - limit));
  }
}
