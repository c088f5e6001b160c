#pragma once

// Exceptional Laguerre polynomials of the extended radial oscillator and the
// matching eigenfunctions.
//
//   L1: branch 2, first process.   seed L_m^{l-1/2}(-y), states of V~-.
//   L2: branch 2, second process.  seed L_m^{-l-1/2}(y),  states of Vbar+.
//   L3: branch 1, first process.   seed L_m^{-l-3/2}(-y), states of V~-.
//
// Every eigenfunction is half_density(r) * P(y), y = w r^2/2, with P the
// polynomial returned by eop_polynomial.

#include <optional>
#include <string>
#include <vector>

#include "isoshift/catalog.hpp"
#include "isoshift/deform.hpp"
#include "isoshift/polyengine.hpp"

namespace isoshift {

enum class Series { L1, L2, L3 };

std::string series_name(Series s);
Series parse_series(const std::string& s);

/// Catalog branch and process that generate a series.
int series_branch(Series s);
Process series_process(Series s);
/// Series produced by an RO branch with its default process (branch 4 has none).
std::optional<Series> series_for_branch(int k);

struct EOPSpec {
  Series series = Series::L1;
  int n = 0;
  int m = 0;
  RadialOscillator params;
};

/// Polynomial part as a function of y.
///   L1: L_m^{l+1/2}(-y) L_n^{l-1/2}(y) - L_m^{l-1/2}(-y) L_n^{l-1/2}'(y)
///   L2: [(l-m+1/2) L_m^{-l-3/2}(y) L_n^{l+1/2}(y) + y L_m^{-l-1/2}(y) L_n^{l+1/2}'(y)] / (l-m+1/2)
///   L3: n = 0 -> 1;  n = j+1 -> 2y L_j^{l+5/2}(y) L_m^a(-y) + 2(m+a) L_m^{a-1}(-y) L_j^{l+3/2}(y),
///       a = -l-3/2 (r times the r-dependent form printed for this series).
/// Degree n + m, except the L3 ground state (n = 0).
template <class T>
T eop_polynomial(const EOPSpec& s, const T& y) {
  using poly::LaguerreSpec;
  using poly::laguerre_deriv;
  using poly::laguerre_eval;
  const double l = s.params.ell;
  const int n = s.n, m = s.m;
  switch (s.series) {
    case Series::L1:
      return laguerre_eval(LaguerreSpec{m, l + 0.5}, -y) * laguerre_eval(LaguerreSpec{n, l - 0.5}, y) -
             laguerre_eval(LaguerreSpec{m, l - 0.5}, -y) * laguerre_deriv(LaguerreSpec{n, l - 0.5}, y);
    case Series::L2: {
      const double c = l - m + 0.5;
      return (c * laguerre_eval(LaguerreSpec{m, -l - 1.5}, y) * laguerre_eval(LaguerreSpec{n, l + 0.5}, y) +
              y * laguerre_eval(LaguerreSpec{m, -l - 0.5}, y) * laguerre_deriv(LaguerreSpec{n, l + 0.5}, y)) /
             c;
    }
    case Series::L3: {
      if (n == 0) return T(1.0);
      const double a = -l - 1.5;
      const int j = n - 1;
      return 2.0 * y * laguerre_eval(LaguerreSpec{j, l + 2.5}, y) * laguerre_eval(LaguerreSpec{m, a}, -y) +
             2.0 * (m + a) * laguerre_eval(LaguerreSpec{m, a - 1.0}, -y) * laguerre_eval(LaguerreSpec{j, l + 1.5}, y);
    }
  }
  return T(0.0);
}

/// Seed polynomial (denominator of the half-density) as a function of y.
template <class T>
T eop_denominator(const EOPSpec& s, const T& y) {
  const double l = s.params.ell;
  switch (s.series) {
    case Series::L1:
      return poly::laguerre_eval(poly::LaguerreSpec{s.m, l - 0.5}, -y);
    case Series::L2:
      return poly::laguerre_eval(poly::LaguerreSpec{s.m, -l - 0.5}, y);
    case Series::L3:
      return poly::laguerre_eval(poly::LaguerreSpec{s.m, -l - 1.5}, -y);
  }
  return T(1.0);
}

/// r^p e^{-w r^2/4} / seed, with p = l+1 (L1, L3) or l (L2). Its square is the
/// orthogonality measure for the polynomials.
template <class T>
T half_density(const EOPSpec& s, const T& r) {
  using std::exp;
  using std::pow;
  const double w = s.params.omega;
  const double p = (s.series == Series::L2) ? s.params.ell : s.params.ell + 1.0;
  const T y = 0.5 * w * r * r;
  return pow(r, p) * exp(-0.5 * y) / eop_denominator(s, y);
}

/// Throws DegenerateParameterError for L2 with l - m + 1/2 = 0 and
/// ConfigError for negative indices.
void validate(const EOPSpec& s);

/// P at y = w r^2/2.
double eop_eval(const EOPSpec& s, double r);

/// Eigenvalue of the state in its Hamiltonian (see eop_hamiltonian):
///   L1: w(2l+1) + 2w(n+m);  L2: w(2l+1) + 2w(n-m);  L3: 0 for n = 0, 2w(n+m) otherwise.
double eop_energy(const EOPSpec& s);

/// The deformation behind the series.
Deformation eop_deformation(const EOPSpec& s);

/// Potential whose bound states are the series' eigenfunctions: V~- for L1 and
/// L3, Vbar+ for L2.
Function1D eop_hamiltonian(const EOPSpec& s);

/// half_density * P as a Function1D.
Function1D eigenfunction_closed_form(const EOPSpec& s);
double eigenfunction_closed_form(const EOPSpec& s, double r);

/// Eigenfunction of the undeformed partner that the intertwiner maps onto
/// state n. Empty for the L3 ground state (it has no partner).
std::optional<Function1D> partner_state(const EOPSpec& s);

/// (-d/dr + w) psi.
Function1D intertwine(const Function1D& w, const Function1D& psi);
/// (d/dr + w) psi.
Function1D intertwine_adjoint(const Function1D& w, const Function1D& psi);

/// partner_state mapped through the intertwiner matching the series process.
std::optional<Function1D> eigenfunction_by_intertwining(const EOPSpec& s);

// ---- weights ----

struct WeightSpec {
  Series series = Series::L1;
  int m = 0;
  RadialOscillator params;
};

/// Half-density used as weight (its square is the measure).
double weight_eval(const WeightSpec& w, double r);

/// Weight as printed for each series (L1: r^{l/2} e^{-wr^2/4}/L_m^{l-1/2}(-y);
/// L2: r^l e^{-wr^2/4}/L_m^{-l-1/2}(y); L3: r^{l+2} e^{-wr^2/4}/L_m^{-l-3/2}(-y)).
/// Kept for comparison only.
double printed_weight(const WeightSpec& w, double r);

/// Zeros of the weight's denominator in r > 0. Empty means the weight is
/// positive on (0, inf).
std::vector<double> weight_poles(const WeightSpec& w);

/// exp(-int_anchor^x w~) by adaptive Gauss-Kronrod quadrature. Evaluates to
/// NaN when a singular point of w~ lies between anchor and x.
Function1D weight_from_superpotential(const Function1D& w_tilde, double anchor);

// ---- orthogonality and zeros ----

struct GramReport {
  std::vector<std::vector<double>> G;           // raw inner products
  std::vector<std::vector<double>> normalized;  // G_ij / sqrt(G_ii G_jj)
  double max_offdiag = 0.0;
  double r_cut = 0.0;
  double tail_bound = 0.0;  // bound on the dropped tail relative to min diagonal
};

/// G_nn' = int_0^R_cut P_n P_n' (half-density)^2 dr for n, n' <= n_max,
/// R_cut = max(10, 8/sqrt(w)) (1 + sqrt(n_max + m)). Throws
/// SingularPotentialError if the weight has a pole on (0, inf).
GramReport gram_matrix(Series s, int m, const RadialOscillator& p, int n_max);

struct ZeroCensus {
  int inside = 0;          // real zeros of P(y) with y > 0
  int outside_real = 0;    // real zeros with y < 0
  int outside_complex = 0; // degree - real zeros found
  int degree = 0;
  bool flagged = false;    // a root was flagged by the scan
  int outside() const { return outside_real + outside_complex; }
};

ZeroCensus zero_census(const EOPSpec& s);

}  // namespace isoshift
