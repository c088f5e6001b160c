#include "isoshift/deform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isoshift/errors.hpp"

namespace isoshift {

Process default_process(const Family& f, int k) {
  return (is_radial(f) && k == 3) ? Process::second : Process::first;
}

int Seed::degree() const {
  if (const auto* l = std::get_if<poly::LaguerreSpec>(&poly)) return l->n;
  return std::get<poly::JacobiSpec>(poly).degree;
}

Deformation seed_polynomial(const Family& f, int k, int m, std::optional<Process> process) {
  validate(f);
  if (m < 0) throw ConfigError("hierarchy index m must be >= 0");
  Deformation d;
  d.family = f;
  d.branch = branch(f, k);
  d.m = m;
  d.process = process.value_or(default_process(f, k));
  d.w0 = superpotential(f, d.branch);

  double a = d.branch.a;
  double b = d.branch.b;
  if (d.process == Process::second) {
    a = -a;
    b = -b;
  }
  if (is_radial(f)) {
    d.seed.poly = poly::LaguerreSpec{m, a - 0.5};
    d.seed.arg_sign = (b > 0.0) ? -1.0 : 1.0;
    d.R = (m == 0) ? 0.0 : 2.0 * m * b;
  } else {
    d.seed.poly = poly::JacobiSpec{m, a - 0.5, b - 0.5};
    d.seed.arg_sign = 1.0;
    d.R = (m == 0) ? 0.0 : -4.0 * m * (m + a + b);
  }
  return d;
}

std::vector<double> seed_singular_points(const Family& f, const Seed& s) {
  std::vector<double> out;
  if (s.degree() == 0) return out;
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    const auto& ls = std::get<poly::LaguerreSpec>(s.poly);
    const double Y = 8.0 * ls.n + 4.0 * std::abs(ls.alpha) + 40.0;
    const Interval iv = (s.arg_sign < 0) ? Interval{-Y, 0.0} : Interval{0.0, Y};
    for (double z : poly::real_zeros(ls, iv).zeros) {
      const double y = s.arg_sign * z;
      if (y > 0.0) out.push_back(std::sqrt(2.0 * y / ro->omega));
    }
  } else {
    const auto& js = std::get<poly::JacobiSpec>(s.poly);
    for (double z : poly::real_zeros(js, {-1.0, 1.0}).zeros) out.push_back(0.5 * std::acos(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Function1D phi_from_seed(const Deformation& d) {
  const Interval dom = default_domain(d.family);
  if (d.m == 0) return Function1D::constant(0.0, dom);
  const double sign = (d.process == Process::first) ? 1.0 : -1.0;
  const Family f = d.family;
  const Seed s = d.seed;
  return Function1D(
      [f, s, sign](double x) {
        const Jet u = seed_value(f, s, Jet::variable(x));
        return sign * (u.differentiated() / u);
      },
      dom, seed_singular_points(f, s));
}

Deformation make_deformation(const Family& f, int k, int m, std::optional<Process> process) {
  Deformation d = seed_polynomial(f, k, m, process);
  d.phi = phi_from_seed(d);
  d.singular_points.assign(d.phi.singular_points().begin(), d.phi.singular_points().end());
  d.w_tilde = (m == 0) ? d.w0 : d.w0 + d.phi;
  return d;
}

std::vector<double> regular_points(const std::vector<double>& grid, const std::vector<double>& singular,
                                   double margin) {
  std::vector<double> out;
  for (double x : grid) {
    if (std::none_of(singular.begin(), singular.end(), [&](double s) { return std::abs(x - s) <= margin; })) {
      out.push_back(x);
    }
  }
  return out;
}

double singular_margin(const Family& f) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) return 0.1 / std::sqrt(ro->omega);
  return 0.02;
}

double riccati_residual(const Deformation& d, const std::vector<double>& grid) {
  const double sign = (d.process == Process::first) ? 1.0 : -1.0;
  double worst = 0.0;
  for (double x : grid) {
    const Jet g = d.phi.jet(x);
    const double w = d.w0(x);
    const double r = g.c[0] * g.c[0] + 2.0 * w * g.c[0] + sign * g.c[1] - d.R;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double partner_shift_deviation(const ExtensionPair& e, const std::vector<double>& grid) {
  double worst = 0.0;
  for (double x : grid) {
    worst = std::max(worst, std::abs(e.shifted_tilde()(x) - e.shifted_base()(x) - e.shift));
  }
  return worst;
}

namespace {

ExtensionPair assemble(Process p, const Function1D& w0, const Function1D& w_tilde, double shift,
                       std::vector<double> singular) {
  ExtensionPair e;
  e.process = p;
  e.w_tilde = w_tilde;
  const auto base = partner_potentials(w0);
  const auto tilde = partner_potentials(w_tilde);
  e.V_minus = base.minus;
  e.V_plus = base.plus;
  e.V_tilde_minus = tilde.minus;
  e.V_tilde_plus = tilde.plus;
  e.shift = shift;
  e.singular_points = std::move(singular);
  return e;
}

}  // namespace

ExtensionPair extend(const Deformation& d) {
  ExtensionPair e = assemble(d.process, d.w0, d.w_tilde, d.R, d.singular_points);
  const auto grid = regular_points(certification_grid(d.family), d.singular_points, singular_margin(d.family));
  const double dev = partner_shift_deviation(e, grid);
  if (!(dev <= 1e-10 * (1.0 + std::abs(d.R)))) {
    std::ostringstream os;
    os << "partner shift failed: max |V~ - V - R| = " << dev << " for branch " << d.branch.k << ", m = " << d.m;
    throw InternalInconsistency(os.str());
  }
  return e;
}

namespace {

template <class T>
T w0_closed_form(const RadialOscillator& p, int m, const T& r) {
  const double a = p.ell - 0.5;
  const T y = 0.5 * p.omega * r * r;
  const T la = poly::laguerre_eval(poly::LaguerreSpec{m, a}, -y);
  const T dla = poly::laguerre_deriv(poly::LaguerreSpec{m, a}, -y);
  const T lb = poly::laguerre_eval(poly::LaguerreSpec{m, a + 1.0}, -y);
  const T dlb = poly::laguerre_deriv(poly::LaguerreSpec{m, a + 1.0}, -y);
  return 0.5 * p.omega * r - (p.ell + 1.0) / r + p.omega * r * (dlb / lb - dla / la);
}

}  // namespace

Function1D w0_explicit(const RadialOscillator& p, int m) {
  validate(p);
  if (m < 0) throw ConfigError("hierarchy index m must be >= 0");
  return Function1D::from_closed_form([p, m](const Jet& r) { return w0_closed_form(p, m, r); },
                                      default_domain(p));
}

double w0_partner_offset(const RadialOscillator& p, int m) { return p.omega * (2.0 * p.ell + 2.0 * m + 1.0); }

GroundStateSuperpotential w0_from_ground_state(const Function1D& psi0) {
  GroundStateSuperpotential out;
  out.W = Function1D(
      [psi0](double x) {
        const Jet j = psi0.jet(x);
        return -(j.differentiated() / j);
      },
      psi0.domain(), std::vector<double>(psi0.singular_points().begin(), psi0.singular_points().end()));
  double prev = 0.0;
  for (double x : linspace(psi0.domain().lo, psi0.domain().hi, 4000, false)) {
    const double v = psi0(x);
    if (!std::isfinite(v) || v == 0.0) continue;
    if (prev != 0.0 && ((v < 0.0) != (prev < 0.0))) {
      out.first_sign_change = x;
      break;
    }
    prev = v;
  }
  return out;
}

double W0Consistency::worst() const { return std::max({minus, plus, ground_state, xi}); }

W0Consistency w0_consistency(const RadialOscillator& p, int m, const std::vector<double>& grid) {
  const double w = p.omega, l = p.ell;
  const Function1D W = w0_explicit(p, m);
  const auto d2 = make_deformation(p, 2, m);
  const auto d3 = make_deformation(p, 3, m);
  const auto e2 = extend(d2);
  const auto e3 = extend(d3);
  const double c = w0_partner_offset(p, m);
  const auto pp = partner_potentials(W);
  const Function1D w1 = superpotential(p, 1);
  const auto psi0 = Function1D::from_closed_form(
      [w, l, m](const Jet& r) {
        const Jet y = 0.5 * w * r * r;
        return pow(r, l + 1) * exp(-0.5 * y) * poly::laguerre_eval(poly::LaguerreSpec{m, l + 0.5}, -y) /
               poly::laguerre_eval(poly::LaguerreSpec{m, l - 0.5}, -y);
      },
      default_domain(p));
  const Function1D G = w0_from_ground_state(psi0).W;

  auto rel = [](double a, double ref) { return std::abs(a - ref) / std::max(1.0, std::abs(ref)); };
  W0Consistency out;
  for (double r : grid) {
    out.minus = std::max(out.minus, rel(pp.minus(r), e2.V_tilde_minus(r) - c));
    out.plus = std::max(out.plus, rel(pp.plus(r), e3.V_tilde_plus(r) - c));
    out.ground_state = std::max(out.ground_state, rel(G(r), W(r)));
    out.xi = std::max(out.xi, rel(W(r) - w1(r), d2.phi(r) + d3.phi(r)));
    out.xi_difference = std::max(out.xi_difference, rel(W(r) - w1(r), d2.phi(r) - d3.phi(r)));
  }
  return out;
}

}  // namespace isoshift
