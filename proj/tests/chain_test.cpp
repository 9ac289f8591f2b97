#include <doctest.h>

#include <cmath>
#include <random>

#include "xyquench/chain.hpp"

using namespace xyq;

TEST_CASE("momentum grid is the positive half-integer set") {
  const auto n4 = momentum_grid(4);
  REQUIRE(n4.size() == 2);
  CHECK(n4[0] == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(n4[1] == doctest::Approx(3 * kPi / 4).epsilon(1e-15));

  const auto n2 = momentum_grid(2);
  REQUIRE(n2.size() == 1);
  CHECK(n2[0] == doctest::Approx(kPi / 2).epsilon(1e-15));

  const auto n100 = momentum_grid(ChainSpec::make(100, 0.3));
  CHECK(n100.size() == 50);
  CHECK(n100.front() == doctest::Approx(0.031415926535897934).epsilon(1e-15));
  for (std::size_t i = 1; i < n100.size(); ++i) {
    CHECK(n100[i] > n100[i - 1]);
  }
  CHECK(n100.back() < kPi);
}

TEST_CASE("grid size and minimum for many sizes") {
  for (int n = 2; n <= 400; n += 2) {
    const auto ks = momentum_grid(n);
    REQUIRE(static_cast<int>(ks.size()) == n / 2);
    CHECK(ks.front() == kPi / n);
  }
}

TEST_CASE("chain parameters reject odd, small, and negative-anisotropy chains") {
  CHECK_THROWS_AS(momentum_grid(3), std::invalid_argument);
  CHECK_THROWS_AS(momentum_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(momentum_grid(-4), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec::make(5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec::make(4, -0.1), std::invalid_argument);
  CHECK_NOTHROW(ChainSpec::make(4, 0.0, 1.3));
}

TEST_CASE("dispersion examples") {
  CHECK(dispersion(kPi / 2, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dispersion(0.0, 2.0, 0.0) == 1.0);
  CHECK(dispersion(kPi / 2, 0.5, 0.5) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("bogoliubov angle examples and the gapless error") {
  const double k = 0.7;
  CHECK(bogoliubov_angle(k, std::cos(k), 0.4) == 0.0);
  CHECK(bogoliubov_angle(0.0, 2.0, 0.0) == -1.0);
  CHECK(bogoliubov_angle(kPi / 2, 0.5, 0.5) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(bogoliubov_angle(k, std::cos(k), 0.0), DegeneratePointError);
  CHECK_THROWS_AS(bogoliubov_angle(0.0, 1.0, 0.7), DegeneratePointError);
  try {
    bogoliubov_angle(k, std::cos(k), 0.0);
  } catch (const DegeneratePointError& e) {
    CHECK(e.k() == k);
    CHECK(e.alpha() == 0.0);
  }
}

TEST_CASE("mode bundles gap and angle consistently") {
  const Mode m = make_mode(1.1, 0.2, 0.8);
  CHECK(m.lambda_k > 0.0);
  CHECK(m.cos_theta_k * m.lambda_k == doctest::Approx(std::cos(1.1) - 0.2).epsilon(1e-14));
}

TEST_CASE("property: evenness, positivity, bounded angle") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> k_dist(1e-6, kPi - 1e-6);
  std::uniform_real_distribution<double> b_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> a_dist(0.0, 2.0);
  for (int i = 0; i < 20000; ++i) {
    const double k = k_dist(rng);
    const double b = b_dist(rng);
    const double a = a_dist(rng);
    const double lam = dispersion(k, b, a);
    REQUIRE(lam >= 0.0);
    CHECK(dispersion(-k, b, a) == lam);
    if (lam > 0.0) {
      const double c = bogoliubov_angle(k, b, a);
      REQUIRE(std::abs(c) <= 1.0);
      CHECK(bogoliubov_angle(-k, b, a) == c);
    }
  }
}

TEST_CASE("property: gap vanishes only at cos k = B with alpha sin k = 0") {
  // alpha = 0 and B = cos k: closes.
  for (double k : {0.1, 0.9, 2.0, 3.0}) {
    CHECK(dispersion(k, std::cos(k), 0.0) == 0.0);
    CHECK(dispersion(k, std::cos(k), 1e-3) > 0.0);
    CHECK(dispersion(k, std::cos(k) + 1e-3, 0.0) > 0.0);
  }
  CHECK(dispersion(0.0, 1.0, 5.0) == 0.0);
}
