#include <cmath>
#include <numbers>

#include "doctest.h"
#include "isoshift/deform.hpp"
#include "isoshift/errors.hpp"

using namespace isoshift;

namespace {

double quesne_m1(double w, double l, double r) {
  const double d = w * r * r + 2 * l + 1;
  return 0.25 * w * w * r * r + l * (l + 1) / (r * r) + (2 * w * w * r * r + 4 * w * l - 2 * w) / d +
         8 * w * w * r * r / (d * d) + (l - 0.5) * w;
}

// Finite-difference derivative with one Richardson step.
double fd(const std::function<double(double)>& f, double x, double h) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace

TEST_CASE("RO branch 2, m=1 seed and phi") {
  const double w = 1.7, l = 0.8;
  const Family f = RadialOscillator{w, l};
  const auto d = make_deformation(f, 2, 1);
  CHECK(d.R == doctest::Approx(2 * w));
  CHECK(d.process == Process::first);
  const auto& ls = std::get<poly::LaguerreSpec>(d.seed.poly);
  CHECK(ls.alpha == doctest::Approx(l - 0.5));
  CHECK(d.seed.arg_sign == -1.0);
  for (double r : {0.2, 1.0, 3.0}) {
    const double y = 0.5 * w * r * r;
    CHECK(seed_value(f, d.seed, r) == doctest::Approx(l + 0.5 + y));
    CHECK(d.phi(r) == doctest::Approx(2 * w * r / (w * r * r + 2 * l + 1)).epsilon(1e-14));
  }
  CHECK(riccati_residual(d, certification_grid(f)) <= 1e-10);
  CHECK(d.singular_points.empty());
}

TEST_CASE("m = 0 is the undeformed problem") {
  for (int k = 1; k <= 4; ++k) {
    const Family f = RadialOscillator{1.0, 1.0};
    const auto d = make_deformation(f, k, 0);
    CHECK(d.R == 0.0);
    CHECK(d.phi(0.7) == 0.0);
    const auto e = extend(d);
    for (double r : certification_grid(f, 50)) {
      CHECK(e.V_tilde_minus(r) == e.V_minus(r));
      CHECK(e.V_tilde_plus(r) == e.V_plus(r));
    }
  }
}

TEST_CASE("DPT N=1 phi and constant") {
  const double A = 1.3, B = 0.6;
  const Family f = TrigDPT{A, B};
  for (int k = 1; k <= 4; ++k) {
    const auto d = make_deformation(f, k, 1);
    const auto& js = std::get<poly::JacobiSpec>(d.seed.poly);
    CHECK(js.nu == doctest::Approx(d.branch.a - 0.5));
    CHECK(js.mu == doctest::Approx(d.branch.b - 0.5));
    CHECK(d.R == doctest::Approx(-4.0 * (1 + js.nu + js.mu + 1)));
    const auto g = regular_points(certification_grid(f), d.singular_points, singular_margin(f));
    for (double x : {0.3, 0.7, 1.2}) {
      if (regular_points({x}, d.singular_points, 0.05).empty()) continue;
      const double p1 = (js.nu + 1) + (js.nu + js.mu + 2) * (std::cos(2 * x) - 1) / 2;
      CHECK(d.phi(x) == doctest::Approx(-2 * std::sin(2 * x) * (js.nu + js.mu + 2) / 2 / p1).epsilon(1e-13));
    }
    CHECK(riccati_residual(d, g) <= 1e-9 * (1 + std::abs(d.R)));
    // The printed sign +4N(N+nu+mu+1) does not satisfy the Riccati equation.
    Deformation flipped = d;
    flipped.R = -d.R;
    CHECK(riccati_residual(flipped, g) > 1.0);
  }
}

TEST_CASE("L3 seed pole for l=0.2, m=1") {
  const double w = 1.3;
  const auto d = make_deformation(RadialOscillator{w, 0.2}, 1, 1);
  const auto& ls = std::get<poly::LaguerreSpec>(d.seed.poly);
  CHECK(ls.alpha == doctest::Approx(-1.7));
  REQUIRE(d.singular_points.size() == 1);
  CHECK(d.singular_points[0] == doctest::Approx(std::sqrt(1.4 / w)).epsilon(1e-10));
}

TEST_CASE("L2 and second process seeds") {
  const double w = 1.0, l = 1.0;
  const Family f = RadialOscillator{w, l};
  const auto d3 = seed_polynomial(f, 3, 2);
  CHECK(d3.process == Process::second);
  CHECK(std::get<poly::LaguerreSpec>(d3.seed.poly).alpha == doctest::Approx(l + 0.5));
  CHECK(d3.seed.arg_sign == -1.0);
  CHECK(d3.R == doctest::Approx(4 * w));
  const auto d2 = seed_polynomial(f, 2, 2, Process::second);
  CHECK(std::get<poly::LaguerreSpec>(d2.seed.poly).alpha == doctest::Approx(-l - 0.5));
  CHECK(d2.seed.arg_sign == 1.0);
  CHECK(d2.R == doctest::Approx(-4 * w));
}

TEST_CASE("partner shift and Riccati sweep") {
  for (auto [w, l] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
    const Family f = RadialOscillator{w, l};
    for (int k = 1; k <= 3; ++k) {
      for (int m = 0; m <= 4; ++m) {
        const auto d = make_deformation(f, k, m);
        if (k == 2) CHECK(d.R == doctest::Approx(2 * m * w));
        const auto g = regular_points(certification_grid(f), d.singular_points, singular_margin(f));
        CAPTURE(k);
        CAPTURE(m);
        CHECK(riccati_residual(d, g) <= 1e-9 * (1 + std::abs(d.R)));
        const auto e = extend(d);
        CHECK(partner_shift_deviation(e, g) <= 1e-10 * (1 + std::abs(d.R)));
      }
    }
  }
}

TEST_CASE("Quesne m=1 closed form") {
  for (auto [w, l] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
    const Family f = RadialOscillator{w, l};
    const auto e = extend(make_deformation(f, 2, 1));
    for (double r : certification_grid(f)) {
      const double q = quesne_m1(w, l, r);
      CHECK(std::abs(e.V_tilde_minus(r) - q) <= 1e-10 * std::abs(q));
    }
  }
}

TEST_CASE("m=2 term-by-term extension") {
  // V~- = V-(w2) + (w r + 2l/r) w r G - w r d/dy(w r G) + (w r G)^2,
  // G = d/dy log L_2^{l-1/2}(-y), evaluated with explicit polynomials.
  const double w = 1.0, l = 1.0, a = l - 0.5;
  const auto e = extend(make_deformation(RadialOscillator{w, l}, 2, 2));
  const double r = 1.0;
  const double y = 0.5 * w * r * r;
  const double L = (a + 1) * (a + 2) / 2 + (a + 2) * y + y * y / 2;  // L_2^a(-y)
  const double dL = (a + 2) + y;                                    // d/dy
  const double d2L = 1.0;
  const double G = dL / L;
  const double dG = d2L / L - G * G;
  // d/dy (w r G) with r = sqrt(2y/w): d r/dy = 1/(w r)
  const double d_wrG = G / r + w * r * dG;
  const double vminus = 0.25 * w * w * r * r + l * (l + 1) / (r * r) + w * (l - 0.5);
  const double ref = vminus + (w * r + 2 * l / r) * w * r * G - w * r * d_wrG + (w * r * G) * (w * r * G);
  CHECK(e.V_tilde_minus(r) == doctest::Approx(ref).epsilon(1e-13));
}

TEST_CASE("W0 identities") {
  for (auto [w, l] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
    const RadialOscillator p{w, l};
    for (int m = 0; m <= 3; ++m) {
      const auto W = w0_explicit(p, m);
      const auto d2 = make_deformation(p, 2, m);
      const auto d3 = make_deformation(p, 3, m);
      const auto e2 = extend(d2);
      const auto e3 = extend(d3);
      const double c = w0_partner_offset(p, m);
      const auto pp = partner_potentials(W);
      const auto w1 = superpotential(p, 1);
      for (double r : certification_grid(p, 200)) {
        const double s = std::max(1.0, std::abs(e2.V_tilde_minus(r)));
        CHECK(std::abs(pp.minus(r) - (e2.V_tilde_minus(r) - c)) <= 1e-9 * s);
        CHECK(std::abs(pp.plus(r) - (e3.V_tilde_plus(r) - c)) <= 1e-9 * std::max(1.0, std::abs(e3.V_tilde_plus(r))));
        // xi = W0 - w1 = phi + chi
        CHECK(std::abs(W(r) - w1(r) - (d2.phi(r) + d3.phi(r))) <= 1e-9 * std::max(1.0, std::abs(W(r))));
      }
      if (m == 0) {
        for (double r : {0.3, 2.0}) CHECK(W(r) == doctest::Approx(w1(r)));
      }
    }
  }
}

TEST_CASE("W0 from ground state") {
  const double w = 1.4, l = 1.5;
  const RadialOscillator p{w, l};
  const auto psi0 = Function1D::from_closed_form(
      [w, l](const Jet& r) { return pow(r, l + 1) * exp(-0.25 * w * r * r); }, {1e-3, 20});
  const auto g = w0_from_ground_state(psi0);
  CHECK(!g.first_sign_change);
  const auto w1 = superpotential(p, 1);
  for (double r : {0.2, 1.0, 4.0}) CHECK(g.W(r) == doctest::Approx(w1(r)).epsilon(1e-13));

  CHECK(w0_from_ground_state(Function1D::constant(2.0, {0, 1})).W(0.5) == 0.0);

  // Ground state of V~- for the m-th extension: r^{l+1} e^{-wr^2/4} L_m^{l+1/2}(-y) / L_m^{l-1/2}(-y).
  for (int m = 1; m <= 3; ++m) {
    const auto psi = Function1D::from_closed_form(
        [w, l, m](const Jet& r) {
          const Jet y = 0.5 * w * r * r;
          return pow(r, l + 1) * exp(-0.5 * y) * poly::laguerre_eval(poly::LaguerreSpec{m, l + 0.5}, -y) /
                 poly::laguerre_eval(poly::LaguerreSpec{m, l - 0.5}, -y);
        },
        {1e-3, 20});
    const auto W = w0_explicit(p, m);
    const auto G = w0_from_ground_state(psi);
    for (double r : certification_grid(p, 100)) CHECK(std::abs(G.W(r) - W(r)) <= 1e-9 * std::max(1.0, std::abs(W(r))));
  }

  const auto node = Function1D::from_closed_form([](const Jet& r) { return r - 1.0; }, {0, 3});
  REQUIRE(w0_from_ground_state(node).first_sign_change);
  CHECK(*w0_from_ground_state(node).first_sign_change == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("general R") {
  const double w = 1.0, l = 1.0;
  const RadialOscillator p{w, l};
  const auto poly_path = extend(make_deformation(p, 2, 1));
  const auto num = extend_general_R(p, 2, 2 * w);
  for (double r : certification_grid(p, 200)) {
    const double ref = poly_path.V_tilde_minus(r);
    CHECK(std::abs(num.V_tilde_minus(r) - ref) <= 1e-7 * std::max(1.0, std::abs(ref)));
  }

  const auto zero = extend_general_R(p, 2, 0.0);
  for (double r : {0.3, 1.0, 5.0}) CHECK(zero.V_tilde_plus(r) == zero.V_plus(r));

  // Non-quantized R: FD Riccati oracle on the integrated phi.
  const auto e3 = extend_general_R(p, 2, 3 * w);
  const auto w0 = superpotential(p, 2);
  for (double r : linspace(0.3, 6.0, 40)) {
    auto phi = [&](double x) { return e3.w_tilde(x) - w0(x); };
    const double res = phi(r) * phi(r) + 2 * w0(r) * phi(r) + fd(phi, r, 1e-3) - 3 * w;
    CHECK(std::abs(res) <= 1e-7);
    CHECK(std::abs(e3.V_tilde_plus(r) - e3.V_plus(r) - 3 * w) <= 1e-7 * std::max(1.0, std::abs(e3.V_plus(r))));
  }

  CHECK_THROWS_AS(extend_general_R(p, 3, 1.0), ConfigError);
  CHECK_THROWS_AS(extend_general_R(RadialOscillator{1.0, 0.5}, 1, 1.0), DegenerateParameterError);
}

TEST_CASE("general R, negative R has a node") {
  // R < 0 on branch 2: f solves a Kummer equation with q < 0 and crosses zero.
  const auto e = extend_general_R(RadialOscillator{1.0, 1.0}, 2, -5.0);
  CHECK(!e.singular_points.empty());
}

TEST_CASE("W0 consistency summary") {
  for (int m = 0; m <= 3; ++m) {
    const RadialOscillator p{1.0, 1.0};
    const auto c = w0_consistency(p, m, certification_grid(p, 100));
    CHECK(c.worst() <= 1e-9);
    if (m > 0) CHECK(c.xi_difference > 1e-3);
  }
}
