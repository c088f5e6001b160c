#pragma once

// Truncated Taylor arithmetic (forward-mode automatic differentiation to a
// fixed order). Every closed form in the library is written once, templated on
// the scalar type, and evaluated either on plain doubles or on jets to obtain
// exact-to-rounding derivatives.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace isoshift {

/// Taylor jet of order N: c[k] = f^(k)(x0) / k!.
template <std::size_t N>
struct Taylor {
  static constexpr std::size_t order = N;
  std::array<double, N + 1> c{};

  constexpr Taylor() = default;
  constexpr Taylor(double v) { c[0] = v; }  // NOLINT: implicit lift of constants

  static constexpr Taylor variable(double x0) {
    Taylor t(x0);
    if constexpr (N >= 1) t.c[1] = 1.0;
    return t;
  }

  double value() const { return c[0]; }

  /// k-th derivative at the expansion point.
  double derivative(std::size_t k = 1) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c[k] * fact;
  }

  /// Jet of f'. The top coefficient is unknown and set to NaN.
  Taylor differentiated() const {
    Taylor d;
    for (std::size_t k = 0; k < N; ++k) d.c[k] = static_cast<double>(k + 1) * c[k + 1];
    d.c[N] = std::numeric_limits<double>::quiet_NaN();
    return d;
  }

  Taylor& operator+=(const Taylor& o) {
    for (std::size_t k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (std::size_t k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Taylor& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  Taylor& operator*=(const Taylor& o) { return *this = *this * o; }
  Taylor& operator/=(const Taylor& o) { return *this = *this / o; }

  Taylor operator-() const {
    Taylor r;
    for (std::size_t k = 0; k <= N; ++k) r.c[k] = -c[k];
    return r;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator+(Taylor a, double s) {
    a.c[0] += s;
    return a;
  }
  friend Taylor operator+(double s, Taylor a) { return a + s; }
  friend Taylor operator-(Taylor a, double s) {
    a.c[0] -= s;
    return a;
  }
  friend Taylor operator-(double s, const Taylor& a) { return (-a) + s; }
  friend Taylor operator*(Taylor a, double s) { return a *= s; }
  friend Taylor operator*(double s, Taylor a) { return a *= s; }
  friend Taylor operator/(Taylor a, double s) { return a *= (1.0 / s); }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
      r.c[k] = s;
    }
    return r;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (std::size_t k = 0; k <= N; ++k) {
      double s = a.c[k];
      for (std::size_t j = 1; j <= k; ++j) s -= b.c[j] * q.c[k - j];
      q.c[k] = s / b.c[0];
    }
    return q;
  }
  friend Taylor operator/(double s, const Taylor& b) { return Taylor(s) / b; }
};

template <std::size_t N>
Taylor<N> exp(const Taylor<N>& a) {
  Taylor<N> r;
  r.c[0] = std::exp(a.c[0]);
  for (std::size_t k = 1; k <= N; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a.c[j] * r.c[k - j];
    r.c[k] = s / static_cast<double>(k);
  }
  return r;
}

template <std::size_t N>
Taylor<N> log(const Taylor<N>& a) {
  Taylor<N> r;
  r.c[0] = std::log(a.c[0]);
  for (std::size_t k = 1; k <= N; ++k) {
    double s = static_cast<double>(k) * a.c[k];
    for (std::size_t j = 1; j < k; ++j) s -= static_cast<double>(j) * r.c[j] * a.c[k - j];
    r.c[k] = s / (static_cast<double>(k) * a.c[0]);
  }
  return r;
}

/// a^p for real p, a.c[0] > 0.
template <std::size_t N>
Taylor<N> pow(const Taylor<N>& a, double p) {
  Taylor<N> r;
  r.c[0] = std::pow(a.c[0], p);
  for (std::size_t k = 1; k <= N; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      s += (p * static_cast<double>(j) - static_cast<double>(k - j)) * a.c[j] * r.c[k - j];
    }
    r.c[k] = s / (static_cast<double>(k) * a.c[0]);
  }
  return r;
}

template <std::size_t N>
Taylor<N> sqrt(const Taylor<N>& a) {
  return pow(a, 0.5);
}

template <std::size_t N>
void sincos(const Taylor<N>& a, Taylor<N>& s, Taylor<N>& co) {
  s = Taylor<N>();
  co = Taylor<N>();
  s.c[0] = std::sin(a.c[0]);
  co.c[0] = std::cos(a.c[0]);
  for (std::size_t k = 1; k <= N; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const double ja = static_cast<double>(j) * a.c[j];
      ss += ja * co.c[k - j];
      cc -= ja * s.c[k - j];
    }
    s.c[k] = ss / static_cast<double>(k);
    co.c[k] = cc / static_cast<double>(k);
  }
}

template <std::size_t N>
Taylor<N> sin(const Taylor<N>& a) {
  Taylor<N> s, c;
  sincos(a, s, c);
  return s;
}

template <std::size_t N>
Taylor<N> cos(const Taylor<N>& a) {
  Taylor<N> s, c;
  sincos(a, s, c);
  return c;
}

template <std::size_t N>
Taylor<N> tan(const Taylor<N>& a) {
  Taylor<N> s, c;
  sincos(a, s, c);
  return s / c;
}

template <std::size_t N>
Taylor<N> cot(const Taylor<N>& a) {
  Taylor<N> s, c;
  sincos(a, s, c);
  return c / s;
}

inline double cot(double x) { return std::cos(x) / std::sin(x); }

/// Jet type used by Function1D: value plus four derivatives.
using Jet = Taylor<4>;

inline double value_of(double x) { return x; }
template <std::size_t N>
double value_of(const Taylor<N>& t) {
  return t.c[0];
}

}  // namespace isoshift
