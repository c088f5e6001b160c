#include "isoshift/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "isoshift/errors.hpp"

namespace isoshift {

void validate(const Grid& g) {
  if (!(g.lo < g.hi)) throw ConfigError("grid needs lo < hi");
  if (g.n_points < 64) throw ConfigError("grid needs at least 64 points");
}

Grid radial_grid(const RadialOscillator& p, int k, int m, int n_points) {
  const double s = 1.0 / std::sqrt(p.omega);
  return Grid{1e-4 * s, 16.0 * s * (1.0 + std::sqrt(static_cast<double>(k + m))), n_points};
}

Grid trig_grid(int n_points) { return Grid{1e-6, 0.5 * std::numbers::pi - 1e-6, n_points}; }

Grid default_grid(const Family& f, int k, int m, int n_points) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) return radial_grid(*ro, k, m, n_points);
  return trig_grid(n_points);
}

int SpectralReport::converged() const {
  int c = 0;
  while (c < static_cast<int>(boundary_decay_ok.size()) && boundary_decay_ok[c]) ++c;
  return c;
}

namespace {

// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;
};

Tridiagonal discretize(const Function1D& V, const Grid& g) {
  validate(g);
  const double h = g.spacing();
  Tridiagonal t;
  t.diag.resize(g.n_points);
  t.off = -1.0 / (h * h);
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.node(i + 1);
    const double v = V(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "potential is not finite at node x=" << x;
      throw SingularPotentialError(os.str(), x);
    }
    t.diag[i] = 2.0 / (h * h) + v;
  }
  return t;
}

// Number of eigenvalues below x (Sturm sequence count).
int count_below(const Tridiagonal& t, double x) {
  const double e2 = t.off * t.off;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int k) {
  double lower = std::numeric_limits<double>::infinity();
  for (double d : t.diag) lower = std::min(lower, d);
  lower -= 2.0 * std::abs(t.off);
  double upper = lower + 1.0;
  while (count_below(t, upper) < k) upper = lower + 2.0 * (upper - lower);

  std::vector<double> ev(k);
  for (int j = 0; j < k; ++j) {
    double lo = (j == 0) ? lower : ev[j - 1];
    double hi = upper;
    for (int it = 0; it < 300; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(t, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    ev[j] = 0.5 * (lo + hi);
  }
  return ev;
}

// Inverse iteration with a pivoted tridiagonal LU of T - lambda.
std::vector<double> eigenvector(const Tridiagonal& t, double lambda) {
  const std::size_t n = t.diag.size();
  std::vector<double> dl(n - 1, t.off), d(n), du(n - 1, t.off), du2(n, 0.0);
  std::vector<bool> swapped(n, false);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = t.diag[i] - lambda;
    norm = std::max(norm, std::abs(t.diag[i]) + 2.0 * std::abs(t.off));
  }
  const double floor = std::numeric_limits<double>::epsilon() * norm;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = floor;
      const double f = dl[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = f;
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      swapped[i] = true;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = floor;

  auto solve = [&](std::vector<double>& b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double tmp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = tmp - dl[i] * b[i];
      } else {
        b[i + 1] -= dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  };

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  for (int it = 0; it < 3; ++it) {
    solve(v);
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    for (auto& x : v) x /= m;
  }
  return v;
}

}  // namespace

std::vector<double> discrete_eigenvalues(const Function1D& V, const Grid& grid, int k) {
  if (k < 1) throw ConfigError("need at least one level");
  return lowest_eigenvalues(discretize(V, grid), k);
}

SpectralReport solve_bound_states(const Function1D& V, const Grid& grid, int k) {
  if (k < 1) throw ConfigError("need at least one level");
  validate(grid);
  auto coarse = std::async(std::launch::async, [&] { return discrete_eigenvalues(V, grid, k); });
  const Tridiagonal fine_t = discretize(V, grid.refined());
  SpectralReport rep;
  rep.fine = lowest_eigenvalues(fine_t, k);
  rep.coarse = coarse.get();
  for (int j = 0; j < k; ++j) {
    rep.eigenvalues.push_back((4.0 * rep.fine[j] - rep.coarse[j]) / 3.0);
    rep.grid_convergence.push_back(std::abs(rep.fine[j] - rep.coarse[j]) / 3.0);
    const auto v = eigenvector(fine_t, rep.fine[j]);
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    rep.boundary_decay_ok.push_back(std::abs(v.back()) <= 1e-8 * m);
  }
  return rep;
}

double richardson_ratio(const Function1D& V, const Grid& grid, int state) {
  const Grid g2 = grid.refined();
  const Grid g3 = g2.refined();
  const double e1 = discrete_eigenvalues(V, grid, state + 1)[state];
  const double e2 = discrete_eigenvalues(V, g2, state + 1)[state];
  const double e3 = discrete_eigenvalues(V, g3, state + 1)[state];
  return (e1 - e2) / (e2 - e3);
}

IsospectralityReport isospectrality_report(const Function1D& V_a, const Function1D& V_b, const Grid& grid, int k,
                                           int skip_a, int skip_b) {
  if (skip_a < 0 || skip_b < 0) throw ConfigError("level offsets must be >= 0");
  auto fa = std::async(std::launch::async, [&] { return solve_bound_states(V_a, grid, k + skip_a); });
  const SpectralReport b = solve_bound_states(V_b, grid, k + skip_b);
  const SpectralReport a = fa.get();
  IsospectralityReport rep;
  rep.levels_a.assign(a.eigenvalues.begin() + skip_a, a.eigenvalues.end());
  rep.levels_b.assign(b.eigenvalues.begin() + skip_b, b.eigenvalues.end());
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += rep.levels_a[i] - rep.levels_b[i];
  rep.shift = sum / k;
  for (int i = 0; i < k; ++i) {
    rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.levels_a[i] - rep.levels_b[i] - rep.shift));
  }
  return rep;
}

namespace {

double nearest_singularity(const Function1D& f, double x) {
  double d = std::numeric_limits<double>::infinity();
  for (double s : f.singular_points()) d = std::min(d, std::abs(x - s));
  return d;
}

// psi'' at x from 5-point differences of psi'; the step is halved until
// successive estimates stop improving.
double second_derivative(const Function1D& psi, double x, double room) {
  auto d1 = [&](double t) { return psi.derivative(t); };
  double h = std::min(1e-2 * std::max(std::abs(x), 1e-2), room / 4.0);
  double best = std::numeric_limits<double>::quiet_NaN();
  double prev = best;
  double best_change = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 8; ++k, h *= 0.5) {
    const double est = (-d1(x + 2 * h) + 8 * d1(x + h) - 8 * d1(x - h) + d1(x - 2 * h)) / (12 * h);
    if (k > 0) {
      const double change = std::abs(est - prev);
      if (change < best_change) {
        best_change = change;
        best = est;
      } else {
        break;
      }
    }
    prev = est;
  }
  return best;
}

double room_at(const Function1D& psi, const Function1D& V, double x) {
  const Interval& dom = psi.domain();
  return std::min({x - dom.lo, dom.hi - x, nearest_singularity(psi, x), nearest_singularity(V, x)});
}

}  // namespace

ResidualReport schrodinger_residual(const Function1D& psi, double E, const Function1D& V,
                                    const std::vector<double>& samples) {
  ResidualReport rep;
  std::vector<double> xs;
  double scale = 0.0;
  for (double x : samples) {
    const double room = room_at(psi, V, x);
    const double p = psi(x);
    if (!(room > 1e-8) || !std::isfinite(p) || !std::isfinite(V(x))) {
      ++rep.skipped;
      continue;
    }
    xs.push_back(x);
    scale = std::max(scale, std::abs(p));
  }
  if (scale == 0.0) {
    rep.degenerate = true;
    return rep;
  }
  for (double x : xs) {
    const double d2 = second_derivative(psi, x, room_at(psi, V, x));
    const double r = std::abs(-d2 + (V(x) - E) * psi(x)) / ((std::abs(E) + 1.0) * scale);
    rep.max_residual = std::max(rep.max_residual, r);
    ++rep.evaluated;
  }
  return rep;
}

ResidualReport qhj_residual(const Function1D& psi, double E, const Function1D& V, const std::vector<double>& samples) {
  ResidualReport rep;
  for (double x : samples) {
    const Jet p = psi.jet(x);
    const double room = room_at(psi, V, x);
    if (p.c[0] == 0.0 || !(room > 1e-8)) {
      ++rep.skipped;
      continue;
    }
    double d2 = p.derivative(2);
    if (!std::isfinite(d2)) d2 = second_derivative(psi, x, room);
    const double ratio1 = p.derivative(1) / p.c[0];
    const double Q = -ratio1;
    const double dQ = -d2 / p.c[0] + ratio1 * ratio1;
    const double r = std::abs(Q * Q - dQ - V(x) + E);
    if (!std::isfinite(r)) {
      ++rep.skipped;
      continue;
    }
    rep.max_residual = std::max(rep.max_residual, r);
    ++rep.evaluated;
  }
  rep.degenerate = rep.evaluated == 0;
  return rep;
}

RegularityReport classify_regularity(const Family& f, int k, int m, std::optional<Process> process) {
  RegularityReport rep;
  const Deformation d = seed_polynomial(f, k, m, process);
  rep.points = seed_singular_points(f, d.seed);
  rep.regular = rep.points.empty();
  const int found = static_cast<int>(rep.points.size());
  if (m == 0) {
    rep.rule_count = 0;
    return rep;
  }

  std::ostringstream os;
  if (is_radial(f)) {
    const auto& ls = std::get<poly::LaguerreSpec>(d.seed.poly);
    const double a = ls.alpha;
    if (a < 0.0 && std::abs(a - std::round(a)) < 1e-12) {
      rep.findings.push_back("Laguerre parameter is a negative integer; zero theorem not applied");
      return rep;
    }
    const auto counts = poly::klh_zero_counts(ls.n, a);
    rep.rule_count = d.seed.arg_sign < 0 ? counts.negative : counts.positive;
    if (*rep.rule_count != found) {
      os << "scan found " << found << " pole(s), zero classification predicts " << *rep.rule_count;
      rep.findings.push_back(os.str());
      os.str("");
    }
    if (d.seed.arg_sign < 0) {
      rep.range_count = (ls.n % 2 == 1 && a > -ls.n - 0.5 && a < -ls.n) ? 1 : 0;
      if (*rep.range_count != found) {
        os << "scan found " << found << " pole(s) for m=" << ls.n << ", alpha=" << a
           << "; the range statement (m odd, -m-1/2 < alpha < -m) predicts " << *rep.range_count;
        rep.findings.push_back(os.str());
      }
    }
  } else {
    const auto& js = std::get<poly::JacobiSpec>(d.seed.poly);
    // nu = -l or mu = -l puts an l-fold zero of the seed at x = 0 or x = pi/2.
    for (auto [p, where] : {std::pair{js.mu, "pi/2"}, std::pair{js.nu, "0"}}) {
      if (const int l = poly::jacobi_endpoint_order(p, js.degree)) {
        rep.regular = false;
        os << "seed has a zero of order " << l << " at the endpoint x = " << where;
        rep.findings.push_back(os.str());
        os.str("");
      }
    }
    if (js.nu > -1.0 && js.mu > -1.0) {
      // Classical parameters: all zeros are simple and lie in (-1, 1).
      rep.rule_count = js.degree;
      if (found != js.degree) {
        os << "scan found " << found << " pole(s), classical Jacobi theory predicts " << js.degree;
        rep.findings.push_back(os.str());
      }
    }
  }
  return rep;
}

}  // namespace isoshift
