#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "isoshift/polyengine.hpp"

using namespace isoshift;
using namespace isoshift::poly;

namespace {

// Generalized binomial C(top, k) for integer k >= 0.
double binom(double top, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r *= (top - k + j) / j;
  return r;
}

// Returns the sum; `mag` receives the sum of absolute terms (cancellation scale).
double laguerre_series(int n, double alpha, double x, double* mag = nullptr) {
  double s = 0.0;
  double m = 0.0;
  double xk = 1.0;
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      xk *= -x;
      fact *= k;
    }
    s += binom(n + alpha, n - k) * xk / fact;
    m += std::abs(binom(n + alpha, n - k) * xk / fact);
  }
  if (mag) *mag = m;
  return s;
}

// Two-sided binomial form, independent of the library's Pochhammer sum.
double jacobi_binomial(int N, double nu, double mu, double y) {
  double s = 0.0;
  for (int k = 0; k <= N; ++k) {
    s += binom(N + nu, N - k) * binom(N + mu, k) * std::pow((y - 1) / 2, k) * std::pow((y + 1) / 2, N - k);
  }
  return s;
}

double fd(const std::function<double(double)>& f, double x) {
  // Richardson-refined central difference.
  auto d = [&](double h) { return (f(x + h) - f(x - h)) / (2 * h); };
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace

TEST_CASE("laguerre base cases") {
  for (double a : {-3.7, -1.0, 0.0, 2.5}) {
    for (double x : {-4.0, 0.0, 1.3}) {
      CHECK(laguerre_eval(LaguerreSpec{0, a}, x) == 1.0);
      CHECK(laguerre_eval(LaguerreSpec{1, a}, x) == doctest::Approx(a + 1 - x).epsilon(1e-15));
      CHECK(laguerre_deriv(LaguerreSpec{0, a}, x) == 0.0);
      CHECK(laguerre_deriv(LaguerreSpec{1, a}, x) == -1.0);
    }
  }
}

TEST_CASE("laguerre matches series sum") {
  CHECK(laguerre_eval(LaguerreSpec{2, 0.5}, -1.0) == doctest::Approx(laguerre_series(2, 0.5, -1.0)).epsilon(1e-14));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ua(-5, 5), ux(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const double a = ua(rng), x = ux(rng);
    double mag = 0;
    const double ref = laguerre_series(n, a, x, &mag);
    CHECK(std::abs(laguerre_eval(LaguerreSpec{n, a}, x) - ref) <= 1e-12 * std::max(1.0, mag));
  }
}

TEST_CASE("laguerre derivative: FD and recurrence identity") {
  const LaguerreSpec s{3, 1.5};
  const double d = laguerre_deriv(s, 2.0);
  CHECK(d == doctest::Approx(fd([&](double x) { return laguerre_eval(s, x); }, 2.0)).epsilon(1e-8));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ua(-5, 5), ux(-20, 20);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const double a = ua(rng), x = ux(rng);
    const double l = laguerre_eval(LaguerreSpec{n, a}, x);
    const double l1 = laguerre_eval(LaguerreSpec{n, a + 1}, x);
    const double lhs = laguerre_deriv(LaguerreSpec{n, a}, x);
    CHECK(std::abs(lhs - (l - l1)) <= 1e-10 * std::max({1.0, std::abs(l), std::abs(l1)}));
  }
}

TEST_CASE("laguerre ODE residual") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ua(-5, 5), ux(-20, 20);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const double a = ua(rng), x = ux(rng);
    const Jet u = laguerre_eval(LaguerreSpec{n, a}, Jet::variable(x));
    const double t1 = x * u.derivative(2), t2 = (a + 1 - x) * u.derivative(1), t3 = n * u.value();
    const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
    CHECK(std::abs(t1 + t2 + t3) <= 1e-9 * scale);
  }
}

TEST_CASE("jacobi base cases and series") {
  CHECK(jacobi_eval(JacobiSpec{0, 0.3, -0.2}, 0.4) == 1.0);
  CHECK(jacobi_eval(JacobiSpec{1, 0.3, -0.2}, 0.4) == doctest::Approx(1.3 + 2.1 * (0.4 - 1) / 2));
  CHECK(jacobi_deriv(JacobiSpec{1, 0.3, -0.2}, 0.4) == doctest::Approx(2.1 / 2));
  CHECK(jacobi_deriv(JacobiSpec{0, 0.3, -0.2}, 0.4) == 0.0);
  CHECK(jacobi_eval(JacobiSpec{2, 0.5, -0.25}, 0.3) ==
        doctest::Approx(jacobi_binomial(2, 0.5, -0.25, 0.3)).epsilon(1e-14));

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> up(-3, 4), uy(-1, 1);
  for (int i = 0; i < 300; ++i) {
    const int N = static_cast<int>(rng() % 8);
    const double nu = up(rng), mu = up(rng), y = uy(rng);
    const double ref = jacobi_binomial(N, nu, mu, y);
    const double got = jacobi_eval(JacobiSpec{N, nu, mu}, y);
    CHECK(std::abs(got - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("jacobi degenerate recurrence uses series") {
  // nu + mu = -3 makes the k = 3 denominator 2k(k+nu+mu)(...) vanish.
  const JacobiSpec s{4, -1.25, -1.75};
  CHECK(jacobi_recurrence_degenerate(s));
  CHECK(!jacobi_recurrence_degenerate(JacobiSpec{4, 0.5, 0.5}));
  for (double y : {-0.9, -0.1, 0.6}) {
    CHECK(jacobi_eval(s, y) == doctest::Approx(jacobi_binomial(4, -1.25, -1.75, y)).epsilon(1e-12));
  }
}

TEST_CASE("jacobi derivative and ODE residual") {
  const JacobiSpec s{4, 1.0, 2.0};
  CHECK(jacobi_deriv(s, 0.5) == doctest::Approx(fd([&](double y) { return jacobi_eval(s, y); }, 0.5)).epsilon(1e-8));

  std::mt19937 rng(9);
  std::uniform_real_distribution<double> up(-3, 4), uy(-1, 1);
  for (int i = 0; i < 500; ++i) {
    const int N = static_cast<int>(rng() % 8);
    const double nu = up(rng), mu = up(rng), y = uy(rng);
    const Jet u = jacobi_series(JacobiSpec{N, nu, mu}, Jet::variable(y));
    const double t1 = (1 - y * y) * u.derivative(2);
    const double t2 = (mu - nu - (nu + mu + 2) * y) * u.derivative(1);
    const double t3 = N * (N + nu + mu + 1) * u.value();
    const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
    CHECK(std::abs(t1 + t2 + t3) <= 1e-9 * scale);
    const double d = jacobi_deriv(JacobiSpec{N, nu, mu}, y);
    CHECK(std::abs(d - u.derivative(1)) <= 1e-9 * std::max(1.0, std::abs(d)));
  }
}

TEST_CASE("real zeros: degree one") {
  auto z = real_zeros(LaguerreSpec{1, 0.5}, {0, 10});
  REQUIRE(z.count() == 1);
  CHECK(z.zeros[0] == doctest::Approx(1.5).epsilon(1e-12));
  z = real_zeros(LaguerreSpec{1, -1.7}, {-10, 0});
  REQUIRE(z.count() == 1);
  CHECK(z.zeros[0] == doctest::Approx(-0.7).epsilon(1e-12));
}

TEST_CASE("real zeros: companion matrix oracle") {
  const int n = 3;
  const double a = 2.5;
  // Monomial coefficients of L_3^{2.5}, highest degree normalized.
  std::vector<double> c(n + 1);
  double fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    c[k] = binom(n + a, n - k) * ((k % 2) ? -1.0 : 1.0) / fact;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> roots;
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()[i].real());
  std::sort(roots.begin(), roots.end());

  const auto z = real_zeros(LaguerreSpec{n, a}, {0, 30});
  REQUIRE(z.count() == 3);
  for (int i = 0; i < n; ++i) CHECK(z.zeros[i] == doctest::Approx(roots[i]).epsilon(1e-10));
}

TEST_CASE("real zeros: touching root is flagged") {
  const auto z = real_zeros([](double x) { return (x - 0.3) * (x - 0.3); }, {-1, 1}, 1001);
  REQUIRE(z.count() == 1);
  CHECK(z.zeros[0] == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(z.multiplicity_flags[0]);
}

TEST_CASE("classical zero count for alpha > -1") {
  for (int n = 0; n <= 8; ++n) {
    for (double a : {-0.9, -0.5, 0.0, 0.5, 3.0}) {
      CHECK(real_zeros(LaguerreSpec{n, a}, {0, 4.0 * n + 2 * std::abs(a) + 20}).count() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("KLH counts agree with scan") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ua(-10, 3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    double a = ua(rng);
    if (std::abs(a - std::round(a)) < 1e-3) a += 0.01;
    const double Y = 8.0 * n + 4 * std::abs(a) + 40;
    const auto pos = real_zeros(LaguerreSpec{n, a}, {0, Y});
    const auto neg = real_zeros(LaguerreSpec{n, a}, {-Y, 0});
    const auto klh = klh_zero_counts(n, a);
    CAPTURE(n);
    CAPTURE(a);
    CHECK(static_cast<int>(pos.count()) == klh.positive);
    CHECK(static_cast<int>(neg.count()) == klh.negative);
  }
}

TEST_CASE("jacobi endpoint zeros are factored out") {
  // P_2^(1,-2)(y) = 3 ((1+y)/2)^2 and P_3^(-1,0.5)(y) = c ((y-1)/2) P_2^(1,0.5)(y).
  for (double y : {-0.99999, -0.9, 0.0, 0.7}) {
    const double exact = 3.0 * std::pow((1.0 + y) / 2.0, 2);
    CHECK(std::abs(jacobi_eval(JacobiSpec{2, 1.0, -2.0}, y) - exact) <= 1e-14 * exact);
    CHECK(jacobi_eval(JacobiSpec{3, -1.0, 0.5}, y) ==
          doctest::Approx(jacobi_binomial(3, -1.0, 0.5, y)).epsilon(1e-12));
    CHECK(jacobi_eval(JacobiSpec{3, 0.25, -2.0}, y) ==
          doctest::Approx(jacobi_binomial(3, 0.25, -2.0, y)).epsilon(1e-12));
  }
  CHECK(jacobi_endpoint_order(-2.0, 3) == 2);
  CHECK(jacobi_endpoint_order(-2.0, 1) == 0);
  CHECK(jacobi_endpoint_order(-1.5, 3) == 0);
}
