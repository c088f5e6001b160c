#include "isoshift/polyengine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isoshift::poly {

bool jacobi_recurrence_degenerate(const JacobiSpec& s) {
  const double ab = s.nu + s.mu;
  for (int k = 2; k <= s.degree; ++k) {
    const double denom = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
    const double scale = 2.0 * k * (k + std::abs(ab)) * (2.0 * k + std::abs(ab) + 2.0);
    if (std::abs(denom) <= 1e-10 * scale) return true;
  }
  return false;
}

namespace {

constexpr double kRootTol = 1e-12;
constexpr double kNearRoot = 1e-13;

double bisect(const std::function<double(double)>& f, double a, double b, double fa) {
  for (int it = 0; it < 200 && (b - a) > kRootTol; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Golden-section minimization of |f| inside a bracket; used to confirm
// even-multiplicity (touching) roots that a sign scan cannot see.
double argmin_abs(const std::function<double(double)>& f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  for (int it = 0; it < 200 && (b - a) > kRootTol; ++it) {
    if (std::abs(f(c)) < std::abs(f(d))) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

ZeroReport real_zeros(const std::function<double(double)>& f, Interval interval, int samples) {
  if (!(interval.lo < interval.hi) || !std::isfinite(interval.lo) || !std::isfinite(interval.hi)) {
    throw std::invalid_argument("real_zeros: need finite lo < hi");
  }
  samples = std::max(samples, 2);
  // Endpoints are sampled so that roots between lo and the first interior
  // sample are bracketed; roots exactly at an endpoint are not reported.
  const auto xs = linspace(interval.lo, interval.hi, samples + 2, true);
  std::vector<double> vs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = f(xs[i]);

  ZeroReport rep;
  auto push = [&](double z, bool flag) {
    if (!rep.zeros.empty() && std::abs(z - rep.zeros.back()) <= 10 * kRootTol) {
      rep.multiplicity_flags.back() = rep.multiplicity_flags.back() || flag;
      return;
    }
    rep.zeros.push_back(z);
    rep.multiplicity_flags.push_back(flag);
  };

  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vs[i] == 0.0) {
      if (i != 0 && i + 1 != xs.size()) push(xs[i], true);
      continue;
    }
    if (i + 1 < xs.size() && vs[i + 1] != 0.0 && ((vs[i] < 0.0) != (vs[i + 1] < 0.0))) {
      const double z = bisect(f, xs[i], xs[i + 1], vs[i]);
      const bool near = std::abs(z - xs[i]) <= kNearRoot || std::abs(xs[i + 1] - z) <= kNearRoot;
      push(z, near);
    }
    // Local minimum of |f| without sign change: candidate double root.
    if (i > 0 && i + 1 < xs.size() && vs[i - 1] != 0.0 && vs[i + 1] != 0.0 &&
        ((vs[i - 1] < 0.0) == (vs[i] < 0.0)) && ((vs[i] < 0.0) == (vs[i + 1] < 0.0)) &&
        std::abs(vs[i]) < std::abs(vs[i - 1]) && std::abs(vs[i]) < std::abs(vs[i + 1])) {
      const double z = argmin_abs(f, xs[i - 1], xs[i + 1]);
      const double local = std::max(std::abs(vs[i - 1]), std::abs(vs[i + 1]));
      if (std::abs(f(z)) <= 1e-8 * local) push(z, true);
    }
  }
  std::vector<std::size_t> idx(rep.zeros.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return rep.zeros[a] < rep.zeros[b]; });
  ZeroReport sorted;
  for (auto i : idx) {
    sorted.zeros.push_back(rep.zeros[i]);
    sorted.multiplicity_flags.push_back(rep.multiplicity_flags[i]);
  }
  return sorted;
}

ZeroReport real_zeros(const LaguerreSpec& s, Interval interval) {
  return real_zeros([s](double x) { return laguerre_eval(s, x); }, interval, std::max(64 * (s.n + 1), 4096));
}

ZeroReport real_zeros(const JacobiSpec& s, Interval interval) {
  return real_zeros([s](double y) { return jacobi_eval(s, y); }, interval, std::max(64 * (s.degree + 1), 4096));
}

LaguerreZeroCounts klh_zero_counts(int n, double alpha) {
  if (n <= 0) return {};
  if (alpha > -1.0) return {n, 0};
  if (alpha < -n) return {0, (n % 2 == 1) ? 1 : 0};
  const int k = static_cast<int>(std::floor(-alpha));  // -k-1 < alpha < -k
  return {n - k, (k % 2 == 1) ? 1 : 0};
}

}  // namespace isoshift::poly
