#include "isoshift/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isoshift/errors.hpp"

namespace isoshift {

bool is_radial(const Family& f) { return std::holds_alternative<RadialOscillator>(f); }

std::string family_name(const Family& f) { return is_radial(f) ? "radial_oscillator" : "trig_dpt"; }

void validate(const Family& f) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    if (!(ro->omega > 0.0) || !std::isfinite(ro->omega)) throw ConfigError("omega must be positive");
    if (!(ro->ell >= 0.0) || !std::isfinite(ro->ell)) throw ConfigError("ell must be >= 0");
    return;
  }
  const auto& d = std::get<TrigDPT>(f);
  if (!(d.A > -0.5) || !(d.B > -0.5) || !std::isfinite(d.A) || !std::isfinite(d.B)) {
    throw ConfigError("DPT needs A, B > -1/2");
  }
}

Branch branch(const Family& f, int k) {
  if (k < 1 || k > 4) throw ConfigError("branch index must be 1..4, got " + std::to_string(k));
  Branch br;
  br.k = k;
  br.susy_kind = (k == 2 || k == 3) ? SusyKind::broken : SusyKind::exact;
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    const double l = ro->ell;
    const double w = ro->omega;
    br.a = (k == 1 || k == 3) ? -(l + 1.0) : l;
    br.b = (k <= 2) ? w : -w;
    // w^2 - w' - V = b(a - 1/2)
    br.factorization_energy = -br.b * (br.a - 0.5);
    return br;
  }
  const auto& d = std::get<TrigDPT>(f);
  br.a = (k == 1 || k == 3) ? d.A : -d.A - 1.0;
  br.b = (k == 1 || k == 2) ? d.B : -d.B - 1.0;
  // w^2 - w' - V = -(a + b)^2
  br.factorization_energy = (br.a + br.b) * (br.a + br.b);
  return br;
}

bool minus_zero_mode(const Family& f, const Branch& br) {
  if (is_radial(f)) return br.a < 0.0 && br.b > 0.0;
  return br.a < 0.0 && br.b < 0.0;
}

Interval default_domain(const Family& f) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    const double s = 1.0 / std::sqrt(ro->omega);
    return {1e-6 * s, 64.0 * s};
  }
  return {1e-6, std::numbers::pi / 2 - 1e-6};
}

std::vector<double> certification_grid(const Family& f, int n) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    const double s = 1.0 / std::sqrt(ro->omega);
    return linspace(0.1 * s, 10.0 * s, n);
  }
  return linspace(0.05, std::numbers::pi / 2 - 0.05, n);
}

Function1D potential(const Family& f) {
  return Function1D::from_closed_form([f](const Jet& x) { return potential_value(f, x); }, default_domain(f));
}

Function1D superpotential(const Family& f, const Branch& br) {
  return Function1D::from_closed_form([f, br](const Jet& x) { return superpotential_value(f, br, x); },
                                      default_domain(f));
}

Function1D superpotential(const Family& f, int k) { return superpotential(f, branch(f, k)); }

PartnerPair partner_potentials(const Function1D& w) {
  auto minus = [w](double x) {
    const Jet j = w.jet(x);
    return j * j - j.differentiated();
  };
  auto plus = [w](double x) {
    const Jet j = w.jet(x);
    return j * j + j.differentiated();
  };
  std::vector<double> sing(w.singular_points().begin(), w.singular_points().end());
  return {Function1D(minus, w.domain(), sing), Function1D(plus, w.domain(), sing)};
}

Family tau(const Family& f) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) return RadialOscillator{ro->omega, ro->ell + 1.0};
  const auto& d = std::get<TrigDPT>(f);
  return TrigDPT{d.A + 1.0, d.B + 1.0};
}

Family pairing_map(const Family& f, int i, int j) {
  if (!is_radial(f) && ((i == 3 && j == 2) || (i == 2 && j == 3))) {
    const auto& d = std::get<TrigDPT>(f);
    // w_3(A, B) = -w_2(A-1, B+1); the inverse direction maps (A+1, B-1).
    return (i == 3) ? TrigDPT{d.A - 1.0, d.B + 1.0} : TrigDPT{d.A + 1.0, d.B - 1.0};
  }
  return tau(f);
}

double si_pair_residual(const Family& f, int i, const Family& mapped, int j, const std::vector<double>& grid) {
  const Branch bi = branch(f, i);
  const Branch bj = branch(mapped, j);
  double worst = 0.0;
  for (double x : grid) {
    const double r = superpotential_value(f, bi, x) + superpotential_value(mapped, bj, x);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double si_pair_check(const Family& f, int i, int j, const std::vector<double>& grid) {
  return si_pair_residual(f, i, pairing_map(f, i, j), j, grid);
}

}  // namespace isoshift
