#include <cmath>
#include <numbers>

#include "doctest.h"
#include "isoshift/catalog.hpp"
#include "isoshift/errors.hpp"

using namespace isoshift;

TEST_CASE("RO superpotential values") {
  const Family ro = RadialOscillator{2.0, 1.0};
  CHECK(superpotential(ro, 1)(1.0) == doctest::Approx(-1.0));
  const Branch b1 = branch(ro, 1);
  CHECK(b1.a == -2.0);
  CHECK(b1.b == 2.0);
  CHECK(b1.susy_kind == SusyKind::exact);
  CHECK(branch(ro, 2).susy_kind == SusyKind::broken);
  CHECK(branch(ro, 3).susy_kind == SusyKind::broken);

  // w_4(l) = -w_1(l-1)
  const Family lower = RadialOscillator{2.0, 0.0};
  for (double r : {0.3, 1.0, 4.0}) {
    CHECK(superpotential(ro, 4)(r) == doctest::Approx(-superpotential(lower, 1)(r)).epsilon(1e-15));
  }
}

TEST_CASE("DPT superpotential at pi/4") {
  const Family d = TrigDPT{1.0, 1.0};
  CHECK(std::abs(superpotential(d, 1)(std::numbers::pi / 4)) < 1e-15);
}

TEST_CASE("invalid branch and params") {
  const Family ro = RadialOscillator{1.0, 1.0};
  CHECK_THROWS_AS(branch(ro, 0), ConfigError);
  CHECK_THROWS_AS(branch(ro, 5), ConfigError);
  CHECK_THROWS_AS(validate(Family{RadialOscillator{-1.0, 0.0}}), ConfigError);
  CHECK_THROWS_AS(validate(Family{TrigDPT{-0.6, 1.0}}), ConfigError);
}

TEST_CASE("RO partner potentials match closed forms") {
  const double w = 1.3, l = 0.7;
  const Family ro = RadialOscillator{w, l};
  const auto V = potential(ro);
  const auto p1 = partner_potentials(superpotential(ro, 1));
  const auto p2 = partner_potentials(superpotential(ro, 2));
  for (double r : certification_grid(ro, 50)) {
    CHECK(p1.minus(r) == doctest::Approx(V(r) - w * (l + 1.5)).epsilon(1e-13));
    const double vp2 = 0.25 * w * w * r * r + l * (l - 1) / (r * r) + w * (l + 0.5);
    CHECK(p2.plus(r) == doctest::Approx(vp2).epsilon(1e-13));
  }
  const auto zero = partner_potentials(Function1D::constant(0.0, {0, 1}));
  CHECK(zero.minus(0.5) == 0.0);
  CHECK(zero.plus(0.5) == 0.0);
}

TEST_CASE("QHJ constant is constant and matches the tables") {
  for (auto [w, l] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
    const Family ro = RadialOscillator{w, l};
    const double expected[4] = {-w * (l + 1.5), w * (l - 0.5), w * (l + 1.5), -w * (l - 0.5)};
    const auto V = potential(ro);
    for (int k = 1; k <= 4; ++k) {
      const auto pm = partner_potentials(superpotential(ro, k));
      CHECK(branch(ro, k).qhj_constant() == doctest::Approx(expected[k - 1]));
      for (double r : certification_grid(ro, 200)) {
        const double c = pm.minus(r) - V(r);
        CHECK(std::abs(c - expected[k - 1]) <= 1e-10 * std::max(1.0, std::abs(V(r))));
      }
    }
  }
  for (auto [A, B] : {std::pair{1.0, 1.0}, {1.2, 0.7}, {0.3, 2.5}}) {
    const Family d = TrigDPT{A, B};
    const double expected[4] = {-(A + B) * (A + B), -(1 + A - B) * (1 + A - B), -(1 - A + B) * (1 - A + B),
                                -(2 + A + B) * (2 + A + B)};
    const auto V = potential(d);
    for (int k = 1; k <= 4; ++k) {
      CHECK(branch(d, k).qhj_constant() == doctest::Approx(expected[k - 1]));
      const auto pm = partner_potentials(superpotential(d, k));
      for (double x : certification_grid(d, 200)) {
        CHECK(std::abs(pm.minus(x) - V(x) - expected[k - 1]) <= 1e-10 * std::max(1.0, std::abs(V(x))));
      }
    }
  }
}

TEST_CASE("tau") {
  const auto t = std::get<RadialOscillator>(tau(RadialOscillator{1.0, 0.0}));
  CHECK(t.ell == 1.0);
  CHECK(t.omega == 1.0);
  const auto d = std::get<TrigDPT>(tau(TrigDPT{1.0, 2.0}));
  CHECK(d.A == 2.0);
  CHECK(d.B == 3.0);
  Family f = RadialOscillator{1.0, 0.0};
  for (int i = 0; i < 5; ++i) f = tau(f);
  CHECK(std::get<RadialOscillator>(f).ell == 5.0);
}

TEST_CASE("shape-invariance pairings") {
  const Family ro = RadialOscillator{1.0, 2.0};
  CHECK(si_pair_check(ro, 1, 4, linspace(0.1, 10, 50)) <= 1e-12);
  const Family d = TrigDPT{1.2, 0.7};
  const auto g = certification_grid(d, 50);
  CHECK(si_pair_check(d, 4, 1, g) <= 1e-12);
  CHECK(si_pair_check(d, 2, 3, g) <= 1e-12);
  CHECK(si_pair_check(d, 3, 2, g) <= 1e-12);
  // Under the literal tau the (3,2) pair does not cancel.
  CHECK(si_pair_residual(d, 3, tau(d), 2, g) > 0.1);
  // A mismatched pair must fail.
  CHECK(si_pair_check(ro, 1, 2, linspace(0.1, 10, 50)) > 0.1);
}

TEST_CASE("zero modes of V-") {
  const Family ro = RadialOscillator{1.0, 0.0};
  CHECK(minus_zero_mode(ro, branch(ro, 1)));
  for (int k : {2, 3, 4}) CHECK_FALSE(minus_zero_mode(ro, branch(ro, k)));
  const Family dpt = TrigDPT{1.0, 2.0};
  CHECK(minus_zero_mode(dpt, branch(dpt, 4)));
  for (int k : {1, 2, 3}) CHECK_FALSE(minus_zero_mode(dpt, branch(dpt, k)));
}
