#include "isoshift/eop.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "isoshift/errors.hpp"

namespace isoshift {

std::string series_name(Series s) {
  switch (s) {
    case Series::L1:
      return "L1";
    case Series::L2:
      return "L2";
    case Series::L3:
      return "L3";
  }
  return "?";
}

Series parse_series(const std::string& s) {
  if (s == "L1") return Series::L1;
  if (s == "L2") return Series::L2;
  if (s == "L3") return Series::L3;
  throw ConfigError("unknown series '" + s + "'");
}

int series_branch(Series s) { return s == Series::L3 ? 1 : 2; }

Process series_process(Series s) { return s == Series::L2 ? Process::second : Process::first; }

std::optional<Series> series_for_branch(int k) {
  if (k == 1) return Series::L3;
  if (k == 2) return Series::L1;
  return std::nullopt;
}

void validate(const EOPSpec& s) {
  validate(Family{s.params});
  if (s.n < 0 || s.m < 0) throw ConfigError("state and hierarchy indices must be >= 0");
  if (s.series == Series::L2 && std::abs(s.params.ell - s.m + 0.5) < 1e-12) {
    throw DegenerateParameterError("L2 polynomial undefined for m = l + 1/2");
  }
}

double eop_eval(const EOPSpec& s, double r) {
  validate(s);
  return eop_polynomial(s, 0.5 * s.params.omega * r * r);
}

double eop_energy(const EOPSpec& s) {
  const double w = s.params.omega, l = s.params.ell;
  switch (s.series) {
    case Series::L1:
      return w * (2 * l + 1) + 2 * w * (s.n + s.m);
    case Series::L2:
      return w * (2 * l + 1) + 2 * w * (s.n - s.m);
    case Series::L3:
      return s.n == 0 ? 0.0 : 2 * w * (s.n + s.m);
  }
  return 0.0;
}

Deformation eop_deformation(const EOPSpec& s) {
  return make_deformation(s.params, series_branch(s.series), s.m, series_process(s.series));
}

Function1D eop_hamiltonian(const EOPSpec& s) {
  const auto pp = partner_potentials(eop_deformation(s).w_tilde);
  return s.series == Series::L2 ? pp.plus : pp.minus;
}

Function1D eigenfunction_closed_form(const EOPSpec& s) {
  validate(s);
  const WeightSpec ws{s.series, s.m, s.params};
  return Function1D::from_closed_form(
      [s](const Jet& r) { return half_density(s, r) * eop_polynomial(s, 0.5 * s.params.omega * r * r); },
      default_domain(s.params), weight_poles(ws));
}

double eigenfunction_closed_form(const EOPSpec& s, double r) {
  validate(s);
  return half_density(s, r) * eop_polynomial(s, 0.5 * s.params.omega * r * r);
}

std::optional<Function1D> partner_state(const EOPSpec& s) {
  validate(s);
  const double w = s.params.omega, l = s.params.ell;
  const int n = s.n;
  const Interval dom = default_domain(s.params);
  auto make = [&](double power, double alpha, int deg) {
    return Function1D::from_closed_form(
        [w, power, alpha, deg](const Jet& r) {
          const Jet y = 0.5 * w * r * r;
          return pow(r, power) * exp(-0.5 * y) * poly::laguerre_eval(poly::LaguerreSpec{deg, alpha}, y);
        },
        dom);
  };
  switch (s.series) {
    case Series::L1:
      return make(l, l - 0.5, n);
    case Series::L2:
      return make(l + 1.0, l + 0.5, n);
    case Series::L3:
      if (n == 0) return std::nullopt;
      return make(l + 2.0, l + 1.5, n - 1);
  }
  return std::nullopt;
}

Function1D intertwine(const Function1D& w, const Function1D& psi) {
  return Function1D(
      [w, psi](double x) {
        const Jet p = psi.jet(x);
        return w.jet(x) * p - p.differentiated();
      },
      w.domain(), std::vector<double>(w.singular_points().begin(), w.singular_points().end()));
}

Function1D intertwine_adjoint(const Function1D& w, const Function1D& psi) {
  return Function1D(
      [w, psi](double x) {
        const Jet p = psi.jet(x);
        return w.jet(x) * p + p.differentiated();
      },
      w.domain(), std::vector<double>(w.singular_points().begin(), w.singular_points().end()));
}

std::optional<Function1D> eigenfunction_by_intertwining(const EOPSpec& s) {
  auto src = partner_state(s);
  if (!src) return std::nullopt;
  const auto d = eop_deformation(s);
  return s.series == Series::L2 ? intertwine_adjoint(d.w_tilde, *src) : intertwine(d.w_tilde, *src);
}

// ---- weights ----

double weight_eval(const WeightSpec& w, double r) {
  return half_density(EOPSpec{w.series, 0, w.m, w.params}, r);
}

double printed_weight(const WeightSpec& w, double r) {
  const EOPSpec s{w.series, 0, w.m, w.params};
  const double l = w.params.ell;
  const double y = 0.5 * w.params.omega * r * r;
  double p = 0.0;
  switch (w.series) {
    case Series::L1:
      p = 0.5 * l;
      break;
    case Series::L2:
      p = l;
      break;
    case Series::L3:
      p = l + 2.0;
      break;
  }
  return std::pow(r, p) * std::exp(-0.5 * y) / eop_denominator(s, y);
}

std::vector<double> weight_poles(const WeightSpec& w) {
  const Deformation d = seed_polynomial(w.params, series_branch(w.series), w.m, series_process(w.series));
  return seed_singular_points(w.params, d.seed);
}

Function1D weight_from_superpotential(const Function1D& w_tilde, double anchor) {
  std::vector<double> sing(w_tilde.singular_points().begin(), w_tilde.singular_points().end());
  return Function1D(
      [w_tilde, anchor, sing](double x) {
        const double lo = std::min(anchor, x), hi = std::max(anchor, x);
        for (double s : sing) {
          if (s >= lo && s <= hi) return Jet(std::numeric_limits<double>::quiet_NaN());
        }
        using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
        const double I = (x == anchor) ? 0.0 : GK::integrate([&](double t) { return w_tilde(t); }, anchor, x, 8, 1e-12);
        // log W = -I; (log W)' = -w~, so the jet of log W follows from the jet of w~.
        const Jet wj = w_tilde.jet(x);
        Jet lw;
        lw.c[0] = -I;
        for (std::size_t k = 0; k < Jet::order; ++k) lw.c[k + 1] = -wj.c[k] / static_cast<double>(k + 1);
        return exp(lw);
      },
      w_tilde.domain(), sing);
}

// ---- orthogonality ----

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

// Adaptive bisection on an absolute tolerance; the recursion is fixed by the
// integrand, so results are reproducible.
template <class F>
double adaptive(const F& f, double a, double b, double abs_tol, int depth) {
  double err = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err);
  if (err <= abs_tol || depth == 0) return v;
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, abs_tol / 2, depth - 1) + adaptive(f, mid, b, abs_tol / 2, depth - 1);
}

}  // namespace

GramReport gram_matrix(Series series, int m, const RadialOscillator& p, int n_max) {
  if (n_max < 0) throw ConfigError("n_max must be >= 0");
  const WeightSpec ws{series, m, p};
  const auto poles = weight_poles(ws);
  if (!poles.empty()) {
    std::ostringstream os;
    os << "weight of " << series_name(series) << " m=" << m << " has a pole at r=" << poles.front();
    throw SingularPotentialError(os.str(), poles.front());
  }
  for (int n = 0; n <= n_max; ++n) validate(EOPSpec{series, n, m, p});

  GramReport rep;
  const double w = p.omega;
  rep.r_cut = std::max(10.0, 8.0 / std::sqrt(w)) * (1.0 + std::sqrt(static_cast<double>(n_max + m)));
  const int N = n_max + 1;
  const int panels = 32;
  const double h = rep.r_cut / panels;

  auto integrand = [&](int i, int j) {
    const EOPSpec si{series, i, m, p}, sj{series, j, m, p};
    return [si, sj, w](double r) {
      const double y = 0.5 * w * r * r;
      const double hd = half_density(si, r);
      return eop_polynomial(si, y) * eop_polynomial(sj, y) * hd * hd;
    };
  };
  auto integrate = [&](int i, int j, double tol) {
    const auto f = integrand(i, j);
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) sum += adaptive(f, k * h, (k + 1) * h, tol / panels, 6);
    return sum;
  };

  rep.G.assign(N, std::vector<double>(N, 0.0));
  rep.normalized = rep.G;
  for (int i = 0; i < N; ++i) {
    // Positive integrand: a relative tolerance per panel is enough.
    const auto f = integrand(i, i);
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) sum += GK::integrate(f, k * h, (k + 1) * h, 6, 1e-14);
    rep.G[i][i] = sum;
  }
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      const double scale = std::sqrt(rep.G[i][i] * rep.G[j][j]);
      rep.G[i][j] = rep.G[j][i] = integrate(i, j, 1e-12 * scale);
    }
  }
  double min_diag = std::numeric_limits<double>::infinity();
  for (int i = 0; i < N; ++i) {
    min_diag = std::min(min_diag, rep.G[i][i]);
    for (int j = 0; j < N; ++j) {
      rep.normalized[i][j] = rep.G[i][j] / std::sqrt(rep.G[i][i] * rep.G[j][j]);
      if (i != j) rep.max_offdiag = std::max(rep.max_offdiag, std::abs(rep.normalized[i][j]));
    }
  }
  // Gaussian tail estimate: int_R^inf g ~ g(R) / (w R) for g ~ poly * exp(-w r^2/2).
  double tail = 0.0;
  for (int i = 0; i < N; ++i) {
    tail = std::max(tail, std::abs(integrand(i, i)(rep.r_cut)) / (w * rep.r_cut));
  }
  rep.tail_bound = tail / min_diag;
  return rep;
}

ZeroCensus zero_census(const EOPSpec& s) {
  validate(s);
  ZeroCensus z;
  z.degree = (s.series == Series::L3 && s.n == 0) ? 0 : s.n + s.m;
  if (z.degree == 0) return z;
  const double Y = 8.0 * z.degree + 4.0 * std::abs(s.params.ell) + 40.0;
  const int samples = std::max(4096, 64 * (z.degree + 1));
  auto f = [&s](double y) { return eop_polynomial(s, y); };
  const auto in = poly::real_zeros(f, {0.0, Y}, samples);
  const auto out = poly::real_zeros(f, {-Y, 0.0}, samples);
  z.inside = static_cast<int>(in.count());
  z.outside_real = static_cast<int>(out.count());
  z.outside_complex = z.degree - z.inside - z.outside_real;
  for (bool b : in.multiplicity_flags) z.flagged = z.flagged || b;
  for (bool b : out.multiplicity_flags) z.flagged = z.flagged || b;
  if (z.outside_complex < 0) z.flagged = true;
  return z;
}

}  // namespace isoshift
