#pragma once

// Classical orthogonal polynomials with arbitrary real parameters: associated
// Laguerre L_n^alpha and Jacobi P_N^(nu,mu), their derivatives, and real zeros.

#include <cmath>
#include <functional>
#include <vector>

#include "isoshift/function1d.hpp"

namespace isoshift::poly {

struct LaguerreSpec {
  int n = 0;
  double alpha = 0.0;
};

struct JacobiSpec {
  int degree = 0;
  double nu = 0.0;
  double mu = 0.0;
};

/// L_n^alpha(x) by the three-term recurrence in degree. T is double or a jet.
template <class T>
T laguerre_eval(const LaguerreSpec& s, const T& x) {
  if (s.n <= 0) return T(1.0);
  T prev(1.0);
  T cur = (s.alpha + 1.0) - x;
  for (int k = 1; k < s.n; ++k) {
    T next = ((2.0 * k + 1.0 + s.alpha) - x) * cur - (k + s.alpha) * prev;
    next = next / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
template <class T>
T laguerre_deriv(const LaguerreSpec& s, const T& x) {
  if (s.n <= 0) return T(0.0);
  return -laguerre_eval(LaguerreSpec{s.n - 1, s.alpha + 1.0}, x);
}

/// True when the Jacobi recurrence denominator 2k(k+nu+mu)(2k+nu+mu-2)
/// vanishes (or nearly so) for some 2 <= k <= N.
bool jacobi_recurrence_degenerate(const JacobiSpec& s);

/// Explicit hypergeometric sum in Pochhammer form:
///   P_N(y) = sum_k (nu+k+1)_{N-k}/(N-k)! * (N+nu+mu+1)_k/k! * ((y-1)/2)^k.
/// Well defined for every real (nu, mu).
template <class T>
T jacobi_series(const JacobiSpec& s, const T& y) {
  const int N = s.degree;
  if (N <= 0) return T(1.0);
  const T z = (y - 1.0) * 0.5;
  T sum(0.0);
  T zk(1.0);
  for (int k = 0; k <= N; ++k) {
    double a = 1.0;  // (nu+k+1)_{N-k} / (N-k)!
    for (int j = 0; j < N - k; ++j) a *= (s.nu + k + 1.0 + j) / (j + 1.0);
    double b = 1.0;  // (N+nu+mu+1)_k / k!
    for (int j = 0; j < k; ++j) b *= (N + s.nu + s.mu + 1.0 + j) / (j + 1.0);
    sum += (a * b) * zk;
    zk = zk * z;
  }
  return sum;
}

/// P_N^(nu,mu)(y). Uses the three-term recurrence; factors out endpoint zeros
/// when nu or mu is -l (l <= N), and switches to the explicit series when the
/// recurrence is degenerate for these parameters.
template <class T>
T jacobi_eval(const JacobiSpec& s, const T& y);

/// 1 <= l <= N when p == -l for an integer l, else 0.
inline int jacobi_endpoint_order(double p, int N) {
  const double l = -std::round(p);
  return (std::abs(p + l) < 1e-12 && l >= 1 && l <= N) ? static_cast<int>(l) : 0;
}

/// For mu = -l (nu = -l), l <= N, P_N has the factor ((1+y)/2)^l (((y-1)/2)^l):
///   P_N^(nu,-l)(y) = C(N+nu, l)/C(N, l) ((1+y)/2)^l P_{N-l}^(nu,l)(y).
/// Evaluating the factor directly keeps full relative accuracy near the endpoint.
template <class T>
T jacobi_factored(const JacobiSpec& s, const T& y, int l, bool at_minus_one) {
  const int N = s.degree;
  const double other = at_minus_one ? s.nu : s.mu;
  double c = 1.0;
  for (int i = 0; i < l; ++i) c *= (N + other - i) / static_cast<double>(N - i);
  const T base = at_minus_one ? (1.0 + y) * 0.5 : (y - 1.0) * 0.5;
  T f(c);
  for (int i = 0; i < l; ++i) f = f * base;
  const JacobiSpec rest = at_minus_one ? JacobiSpec{N - l, s.nu, double(l)} : JacobiSpec{N - l, double(l), s.mu};
  return f * jacobi_eval(rest, y);
}

template <class T>
T jacobi_eval(const JacobiSpec& s, const T& y) {
  const int N = s.degree;
  if (N <= 0) return T(1.0);
  if (const int l = jacobi_endpoint_order(s.mu, N)) return jacobi_factored(s, y, l, true);
  if (const int l = jacobi_endpoint_order(s.nu, N)) return jacobi_factored(s, y, l, false);
  const double ab = s.nu + s.mu;
  T p1 = (s.nu + 1.0) + (ab + 2.0) * (y - 1.0) * 0.5;
  if (N == 1) return p1;
  if (jacobi_recurrence_degenerate(s)) return jacobi_series(s, y);
  T p0(1.0);
  for (int k = 2; k <= N; ++k) {
    const double c = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (c - 2.0);
    const double a2 = (c - 1.0) * (s.nu * s.nu - s.mu * s.mu);
    const double a3 = (c - 1.0) * c * (c - 2.0);
    const double a4 = 2.0 * (k + s.nu - 1.0) * (k + s.mu - 1.0) * c;
    T p2 = ((a2 + a3 * y) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// d/dy P_N^(nu,mu)(y) = (N+nu+mu+1)/2 * P_{N-1}^(nu+1,mu+1)(y).
template <class T>
T jacobi_deriv(const JacobiSpec& s, const T& y) {
  if (s.degree <= 0) return T(0.0);
  return 0.5 * (s.degree + s.nu + s.mu + 1.0) * jacobi_eval(JacobiSpec{s.degree - 1, s.nu + 1.0, s.mu + 1.0}, y);
}

struct ZeroReport {
  std::vector<double> zeros;
  /// Per-root flag: a scan sample fell within 1e-13 of the root, or the root
  /// was found as a touching (even-multiplicity) minimum of |p|.
  std::vector<bool> multiplicity_flags;

  std::size_t count() const { return zeros.size(); }
};

/// Real zeros of a smooth function on (lo, hi): dense sign scan with
/// `samples` points followed by bisection to 1e-12 absolute.
ZeroReport real_zeros(const std::function<double(double)>& f, Interval interval, int samples);

ZeroReport real_zeros(const LaguerreSpec& s, Interval interval);
ZeroReport real_zeros(const JacobiSpec& s, Interval interval);

/// Zero counts of L_n^alpha(x) on the real line according to the
/// Kienast-Lawton-Hahn classification (alpha not a negative integer).
struct LaguerreZeroCounts {
  int positive = 0;
  int negative = 0;
};
LaguerreZeroCounts klh_zero_counts(int n, double alpha);

}  // namespace isoshift::poly
