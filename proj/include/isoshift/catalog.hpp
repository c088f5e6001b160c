#pragma once

// The two undeformed shape-invariant families, their four superpotential
// branches, partner potentials and parameter translations.

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "isoshift/function1d.hpp"

namespace isoshift {

/// V(r) = w^2 r^2 / 4 + l(l+1)/r^2 on (0, inf).
struct RadialOscillator {
  double omega = 1.0;
  double ell = 0.0;
};

/// V(x) = A(A+1) csc^2 x + B(B+1) sec^2 x on (0, pi/2).
struct TrigDPT {
  double A = 0.0;
  double B = 0.0;
};

using Family = std::variant<RadialOscillator, TrigDPT>;

enum class SusyKind { exact, broken };

/// One solution w of w^2 - w' = V - E.
/// RO: w = a/r + b r/2.  DPT: w = a cot x - b tan x.
struct Branch {
  int k = 1;
  double a = 0.0;
  double b = 0.0;
  double factorization_energy = 0.0;  // E in w^2 - w' = V - E
  SusyKind susy_kind = SusyKind::exact;

  /// w^2 - w' - V, i.e. -factorization_energy.
  double qhj_constant() const { return -factorization_energy; }
};

bool is_radial(const Family& f);

/// True when exp(-int w) vanishes at both ends of the domain, i.e. V- = w^2 - w'
/// has a bound state at zero energy. RO: a < 0 and b > 0. DPT: a < 0 and b < 0.
bool minus_zero_mode(const Family& f, const Branch& br);
std::string family_name(const Family& f);

/// Throws ConfigError for k outside 1..4. Parameters are not range-checked
/// here (translated parameter sets may leave the physical range).
Branch branch(const Family& f, int k);
void validate(const Family& f);

template <class T>
T potential_value(const Family& f, const T& x) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    return 0.25 * ro->omega * ro->omega * x * x + ro->ell * (ro->ell + 1.0) / (x * x);
  }
  const auto& d = std::get<TrigDPT>(f);
  T s, c;
  if constexpr (std::is_same_v<T, double>) {
    s = std::sin(x);
    c = std::cos(x);
  } else {
    sincos(x, s, c);
  }
  return d.A * (d.A + 1.0) / (s * s) + d.B * (d.B + 1.0) / (c * c);
}

template <class T>
T superpotential_value(const Family& f, const Branch& br, const T& x) {
  if (is_radial(f)) return br.a / x + 0.5 * br.b * x;
  T s, c;
  if constexpr (std::is_same_v<T, double>) {
    s = std::sin(x);
    c = std::cos(x);
  } else {
    sincos(x, s, c);
  }
  return br.a * (c / s) - br.b * (s / c);
}

/// Default open domain: RO (1e-6/sqrt(w), 64/sqrt(w)); DPT (1e-6, pi/2 - 1e-6).
Interval default_domain(const Family& f);

/// Grid used for pointwise identity checks: RO [0.1, 10]/sqrt(w), DPT
/// [0.05, pi/2 - 0.05].
std::vector<double> certification_grid(const Family& f, int n = 400);

Function1D potential(const Family& f);
Function1D superpotential(const Family& f, int k);
Function1D superpotential(const Family& f, const Branch& br);

struct PartnerPair {
  Function1D minus;  // w^2 - w'
  Function1D plus;   // w^2 + w'
};
PartnerPair partner_potentials(const Function1D& w);

/// RO: l -> l+1.  DPT: (A, B) -> (A+1, B+1).
Family tau(const Family& f);

/// Parameter translation under which w_i(x, p) = -w_j(x, map(p)) is claimed.
/// RO (1,4) and DPT (4,1) use tau; DPT (3,2) needs (A-1, B+1). Any other
/// pair falls back to tau.
Family pairing_map(const Family& f, int i, int j);

/// max over grid of |w_i(x, p) + w_j(x, pairing_map(p))|.
double si_pair_check(const Family& f, int i, int j, const std::vector<double>& grid);

/// Same with an explicit target parameter set.
double si_pair_residual(const Family& f, int i, const Family& mapped, int j, const std::vector<double>& grid);

}  // namespace isoshift
