// Deformation with a non-quantized constant R for the radial oscillator.
//
// With u(r) = f(y), y = w r^2/2, the seed equation u'' + 2 w0 u' - R u = 0
// for w0 = a/r + b r/2 becomes
//   y f'' + (a + 1/2 + s y) f' - q f = 0,   s = b/w, q = R/(2w).
// The solution regular at y = 0 is launched from its power series and
// continued with an adaptive Runge-Kutta-Fehlberg 7(8) integrator.

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <memory>
#include <optional>
#include <sstream>

#include "isoshift/deform.hpp"
#include "isoshift/errors.hpp"

namespace isoshift {

namespace {

using State = std::array<double, 2>;  // (f, f')

class RegularSolution {
 public:
  RegularSolution(double A, double s, double q, double y_max) : A_(A), s_(s), q_(q) {
    State st = series(y_switch_);
    double y = y_switch_;
    ys_.push_back(y);
    states_.push_back(st);
    while (y < y_max) {
      const double next = std::min(y + step_, y_max);
      integrate(st, y, next);
      y = next;
      ys_.push_back(y);
      states_.push_back(st);
    }
  }

  State eval(double y) const {
    if (y <= y_switch_) return series(y);
    auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
    const std::size_t i = static_cast<std::size_t>(std::distance(ys_.begin(), it)) - 1;
    State st = states_[i];
    if (y > ys_[i]) integrate(st, ys_[i], y);
    return st;
  }

  /// First sign change of f on (0, y_hi), located to ~1e-12 in y.
  std::optional<double> first_zero(double y_hi) const {
    std::vector<double> probe = linspace(0.0, y_switch_, 200, false);
    for (double y : ys_) {
      if (y > y_hi) break;
      probe.push_back(y);
    }
    double prev_y = 0.0;
    double prev = 1.0;  // f(0) = 1
    for (double y : probe) {
      const double v = eval(y)[0];
      if ((v < 0.0) != (prev < 0.0)) {
        double lo = prev_y, hi = y;
        for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
          const double mid = 0.5 * (lo + hi);
          if ((eval(mid)[0] < 0.0) == (prev < 0.0)) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        return 0.5 * (lo + hi);
      }
      prev_y = y;
      prev = v;
    }
    return std::nullopt;
  }

 private:
  State series(double y) const {
    double c = 1.0;
    double f = 1.0;
    double fp = 0.0;
    double yk = 1.0;  // y^k
    for (int k = 0; k < 400; ++k) {
      const double next = (q_ - s_ * k) * c / ((k + 1.0) * (k + A_));
      fp += (k + 1.0) * next * yk;
      yk *= y;
      f += next * yk;
      c = next;
      if (c == 0.0) break;
      // Past k ~ |q| the terms decay monotonically for y <= 1.
      if (k > 4 + 2 * std::abs(q_) && std::abs((k + 1.0) * next * yk) <= 1e-18 * (std::abs(f) + std::abs(fp))) break;
    }
    return {f, fp};
  }

  void integrate(State& st, double y0, double y1) const {
    namespace ode = boost::numeric::odeint;
    const double A = A_, s = s_, q = q_;
    auto rhs = [A, s, q](const State& x, State& dx, double y) {
      dx[0] = x[1];
      dx[1] = (q * x[0] - (A + s * y) * x[1]) / y;
    };
    auto stepper = ode::make_controlled(1e-15, 1e-13, ode::runge_kutta_fehlberg78<State>());
    ode::integrate_adaptive(stepper, rhs, st, y0, y1, std::min(0.01, y1 - y0));
  }

  double A_, s_, q_;
  double y_switch_ = 1.0;
  double step_ = 0.25;
  std::vector<double> ys_;
  std::vector<State> states_;
};

}  // namespace

ExtensionPair extend_general_R(const RadialOscillator& p, int k, double R) {
  validate(p);
  const Family fam = p;
  const Branch br = branch(fam, k);
  if (br.b <= 0.0) throw ConfigError("general-R extension supports branches 1 and 2 only");
  const double A = br.a + 0.5;
  if (A <= 0.0 && std::abs(A - std::round(A)) < 1e-12) {
    throw DegenerateParameterError("series launch undefined: a + 1/2 is a non-positive integer");
  }
  if (!std::isfinite(R)) throw ConfigError("R must be finite");

  const Interval dom = default_domain(fam);
  const Function1D w0 = superpotential(fam, br);
  if (R == 0.0) {
    ExtensionPair e;
    e.process = Process::first;
    e.w_tilde = w0;
    const auto base = partner_potentials(w0);
    e.V_minus = e.V_tilde_minus = base.minus;
    e.V_plus = e.V_tilde_plus = base.plus;
    e.shift = 0.0;
    return e;
  }

  const double w = p.omega;
  const double y_max = 0.5 * w * dom.hi * dom.hi;
  auto sol = std::make_shared<const RegularSolution>(A, br.b / w, R / (2.0 * w), y_max);

  std::vector<double> singular;
  if (auto z = sol->first_zero(y_max)) singular.push_back(std::sqrt(2.0 * *z / w));

  // phi = u'/u; higher Taylor coefficients follow from phi' = R - phi^2 - 2 w0 phi.
  Function1D phi(
      [sol, w0, w, R](double r) {
        const State st = sol->eval(0.5 * w * r * r);
        const Jet wj = w0.jet(r);
        Jet g;
        g.c[0] = w * r * st[1] / st[0];
        for (std::size_t n = 0; n < Jet::order; ++n) {
          double sq = 0.0, cross = 0.0;
          for (std::size_t j = 0; j <= n; ++j) {
            sq += g.c[j] * g.c[n - j];
            cross += wj.c[j] * g.c[n - j];
          }
          g.c[n + 1] = ((n == 0 ? R : 0.0) - sq - 2.0 * cross) / static_cast<double>(n + 1);
        }
        return g;
      },
      dom, singular);

  ExtensionPair e;
  e.process = Process::first;
  e.w_tilde = w0 + phi;
  const auto base = partner_potentials(w0);
  const auto tilde = partner_potentials(e.w_tilde);
  e.V_minus = base.minus;
  e.V_plus = base.plus;
  e.V_tilde_minus = tilde.minus;
  e.V_tilde_plus = tilde.plus;
  e.shift = R;
  e.singular_points = singular;
  return e;
}

}  // namespace isoshift
