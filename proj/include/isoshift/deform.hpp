#pragma once

// Isospectral shift deformation of a superpotential: w~ = w0 + phi with
// phi^2 + 2 w0 phi + phi' = R, so that V~+ = V+ + R.
//
// The second process deforms with chi = -v'/v, v'' - 2 w0 v' - R v = 0, and
// shifts the other partner: Vbar- = V- + R.

#include <optional>
#include <variant>
#include <vector>

#include "isoshift/catalog.hpp"
#include "isoshift/polyengine.hpp"

namespace isoshift {

enum class Process { first, second };

/// RO branch 3 uses the second process; everything else the first.
Process default_process(const Family& f, int k);

/// Polynomial seed and its argument map.
/// RO: u(r) = L_m^alpha(arg_sign * w r^2 / 2).  DPT: u(x) = P_N^(nu,mu)(cos 2x).
struct Seed {
  std::variant<poly::LaguerreSpec, poly::JacobiSpec> poly;
  double arg_sign = -1.0;
  int degree() const;
};

struct Deformation {
  Family family;
  Branch branch;
  int m = 0;
  Process process = Process::first;
  Seed seed;
  double R = 0.0;
  Function1D w0;
  Function1D phi;  // phi (first process) or chi (second process)
  Function1D w_tilde;
  std::vector<double> singular_points;  // zeros of the seed in the physical domain
};

template <class T>
T seed_value(const Family& f, const Seed& s, const T& x) {
  using std::cos;
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    const T y = 0.5 * ro->omega * x * x;
    return poly::laguerre_eval(std::get<poly::LaguerreSpec>(s.poly), s.arg_sign * y);
  }
  return poly::jacobi_eval(std::get<poly::JacobiSpec>(s.poly), cos(2.0 * x));
}

/// Seed and deformation constant for (family, branch, m, process). Fills
/// everything except phi / w_tilde.
///   RO, first process on (a, b):  L_m^{a-1/2}(-sign(b) y), R = 2 m b.
///   DPT, first process on (a, b): P_N^{(a-1/2, b-1/2)}(cos 2x), R = -4N(N+a+b).
/// The second process on (a, b) is the first process on (-a, -b) with the
/// sign of the correction flipped.
Deformation seed_polynomial(const Family& f, int k, int m, std::optional<Process> process = std::nullopt);

/// phi = +/- d/dx log u from the seed (analytic jets through the argument map).
Function1D phi_from_seed(const Deformation& d);

/// Full construction: seed, phi, w_tilde and singular points.
Deformation make_deformation(const Family& f, int k, int m, std::optional<Process> process = std::nullopt);

/// Zeros of the seed mapped into the physical domain.
std::vector<double> seed_singular_points(const Family& f, const Seed& s);

struct ExtensionPair {
  Process process = Process::first;
  Function1D w_tilde;
  Function1D V_minus;  // undeformed partners of w0
  Function1D V_plus;
  Function1D V_tilde_minus;
  Function1D V_tilde_plus;
  double shift = 0.0;
  std::vector<double> singular_points;

  /// The deformed partner that equals an undeformed one plus `shift`.
  const Function1D& shifted_tilde() const { return process == Process::first ? V_tilde_plus : V_tilde_minus; }
  const Function1D& shifted_base() const { return process == Process::first ? V_plus : V_minus; }
};

/// Builds V~-/+ and asserts the partner shift on the certification grid.
/// Throws InternalInconsistency if it fails.
ExtensionPair extend(const Deformation& d);

/// Grid points farther than `margin` from every singular point.
std::vector<double> regular_points(const std::vector<double>& grid, const std::vector<double>& singular,
                                   double margin);

/// Exclusion radius around poles used by the pointwise checks: 0.1/sqrt(w)
/// for RO, 0.02 for DPT.
double singular_margin(const Family& f);

/// max |phi^2 + 2 w0 phi +/- phi' - R| over grid (sign + for the first process).
double riccati_residual(const Deformation& d, const std::vector<double>& grid);

/// max |shifted_tilde - shifted_base - shift| over grid.
double partner_shift_deviation(const ExtensionPair& e, const std::vector<double>& grid);

/// Shape-invariance superpotential of the extended RO:
///   W0 = w r/2 - (l+1)/r + w r [L^{a+1}'(-y)/L^{a+1}(-y) - L^{a}'(-y)/L^{a}(-y)],
/// a = l - 1/2, y = w r^2 / 2.
Function1D w0_explicit(const RadialOscillator& p, int m);

/// W0^2 - W0' and W0^2 + W0' differ from V~- (branch 2) and Vbar+ (branch 3,
/// second process) by this constant: w (2l + 2m + 1).
double w0_partner_offset(const RadialOscillator& p, int m);

struct GroundStateSuperpotential {
  Function1D W;
  std::optional<double> first_sign_change;  // set when psi0 has a node: singular extension
};

/// W = -psi0'/psi0 using the analytic derivative of psi0.
GroundStateSuperpotential w0_from_ground_state(const Function1D& psi0);

struct W0Consistency {
  double minus = 0.0;         // W0^2 - W0' against V~-(branch 2) - c
  double plus = 0.0;          // W0^2 + W0' against Vbar+(branch 3) - c
  double ground_state = 0.0;  // W0 against -d/dr log of the V~- ground state
  double xi = 0.0;            // W0 - w1 against phi(branch 2) + chi(branch 3)
  double xi_difference = 0.0; // same against phi - chi
  double worst() const;       // max of the first four
};

/// Relative residuals (|diff| / max(1, |reference|)) over grid.
W0Consistency w0_consistency(const RadialOscillator& p, int m, const std::vector<double>& grid);

/// Numerical deformation for arbitrary R (RO only): u'' + 2 w0 u' - R u = 0
/// integrated from the regular series at the origin.
ExtensionPair extend_general_R(const RadialOscillator& p, int k, double R);

}  // namespace isoshift
