#pragma once

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "isoshift/taylor.hpp"

namespace isoshift {

/// Open interval (lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x > lo && x < hi; }
  double width() const { return hi - lo; }
};

/// Immutable real function of one variable with analytic derivatives.
///
/// Evaluation returns a Jet (value and up to four derivatives). Functions
/// derived from others (partner potentials, intertwined eigenfunctions) lose
/// one order per differentiation; unavailable orders are NaN.
class Function1D {
 public:
  using Evaluator = std::function<Jet(double)>;

  Function1D() = default;
  Function1D(Evaluator f, Interval domain, std::vector<double> singular_points = {})
      : impl_(std::make_shared<const Impl>(Impl{std::move(f), domain, std::move(singular_points)})) {}

  /// Builds a function from a generic closed form callable on double and Jet.
  template <class F>
  static Function1D from_closed_form(F f, Interval domain, std::vector<double> singular = {}) {
    return Function1D([f](double x) { return Jet(f(Jet::variable(x))); }, domain, std::move(singular));
  }

  static Function1D constant(double v, Interval domain) {
    return Function1D([v](double) { return Jet(v); }, domain);
  }

  explicit operator bool() const { return static_cast<bool>(impl_); }

  Jet jet(double x) const { return impl_->f(x); }
  double operator()(double x) const { return impl_->f(x).c[0]; }
  double derivative(double x) const { return impl_->f(x).derivative(1); }

  const Interval& domain() const { return impl_->domain; }
  std::span<const double> singular_points() const { return impl_->singular; }

  /// Same function with a different declared singular set.
  Function1D with_singular_points(std::vector<double> pts) const {
    return Function1D(impl_->f, impl_->domain, std::move(pts));
  }

 private:
  struct Impl {
    Evaluator f;
    Interval domain;
    std::vector<double> singular;
  };
  std::shared_ptr<const Impl> impl_;
};

Function1D operator+(const Function1D& a, const Function1D& b);
Function1D operator-(const Function1D& a, const Function1D& b);
Function1D operator-(const Function1D& a);
Function1D operator*(double s, const Function1D& a);
Function1D shifted(const Function1D& a, double c);

/// True when x lies farther than `margin` from every declared singular point.
bool away_from_singularities(const Function1D& f, double x, double margin);

/// Uniform grid of n points strictly inside (lo, hi), endpoints included when
/// `closed` is true.
std::vector<double> linspace(double lo, double hi, int n, bool closed = true);

}  // namespace isoshift
