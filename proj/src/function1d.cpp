#include "isoshift/function1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isoshift {

namespace {

std::vector<double> merged_singular(const Function1D& a, const Function1D& b) {
  std::vector<double> out(a.singular_points().begin(), a.singular_points().end());
  out.insert(out.end(), b.singular_points().begin(), b.singular_points().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

}  // namespace

Function1D operator+(const Function1D& a, const Function1D& b) {
  return Function1D([a, b](double x) { return a.jet(x) + b.jet(x); }, intersect(a.domain(), b.domain()),
                    merged_singular(a, b));
}

Function1D operator-(const Function1D& a, const Function1D& b) {
  return Function1D([a, b](double x) { return a.jet(x) - b.jet(x); }, intersect(a.domain(), b.domain()),
                    merged_singular(a, b));
}

Function1D operator-(const Function1D& a) {
  return Function1D([a](double x) { return -a.jet(x); }, a.domain(),
                    std::vector<double>(a.singular_points().begin(), a.singular_points().end()));
}

Function1D operator*(double s, const Function1D& a) {
  return Function1D([a, s](double x) { return s * a.jet(x); }, a.domain(),
                    std::vector<double>(a.singular_points().begin(), a.singular_points().end()));
}

Function1D shifted(const Function1D& a, double c) {
  return Function1D([a, c](double x) { return a.jet(x) + c; }, a.domain(),
                    std::vector<double>(a.singular_points().begin(), a.singular_points().end()));
}

bool away_from_singularities(const Function1D& f, double x, double margin) {
  return std::none_of(f.singular_points().begin(), f.singular_points().end(),
                      [&](double s) { return std::abs(x - s) <= margin; });
}

std::vector<double> linspace(double lo, double hi, int n, bool closed) {
  if (n < 1) throw std::invalid_argument("linspace: n must be positive");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (closed) {
    if (n == 1) {
      out[0] = lo;
      return out;
    }
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + h * i;
    out.back() = hi;
  } else {
    const double h = (hi - lo) / (n + 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + h * (i + 1);
  }
  return out;
}

}  // namespace isoshift
