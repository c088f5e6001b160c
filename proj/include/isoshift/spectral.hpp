#pragma once

// Numerical certification: finite-difference bound states, Schrodinger and
// QHJ residuals, spectrum comparison and the regularity classifier.

#include <optional>
#include <string>
#include <vector>

#include "isoshift/catalog.hpp"
#include "isoshift/deform.hpp"
#include "isoshift/function1d.hpp"

namespace isoshift {

/// Uniform grid with n_points interior nodes lo + i h, i = 1..n_points, and
/// Dirichlet ends at lo and hi.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int n_points = 8000;

  double spacing() const { return (hi - lo) / (n_points + 1); }
  double node(int i) const { return lo + i * spacing(); }
  /// Same interval with the spacing halved (2n + 1 interior nodes).
  Grid refined() const { return Grid{lo, hi, 2 * n_points + 1}; }
};

/// Throws ConfigError unless lo < hi and n_points >= 64.
void validate(const Grid& g);

/// RO: (1e-4, 16 (1 + sqrt(k + m))) / sqrt(w).
Grid radial_grid(const RadialOscillator& p, int k, int m, int n_points = 8000);
/// DPT: (1e-6, pi/2 - 1e-6).
Grid trig_grid(int n_points = 8000);
Grid default_grid(const Family& f, int k, int m, int n_points = 8000);

struct SpectralReport {
  std::vector<double> eigenvalues;       // Richardson-extrapolated, ascending
  std::vector<double> coarse;            // grid n
  std::vector<double> fine;              // grid 2n + 1
  std::vector<bool> boundary_decay_ok;   // |v| at the last interior node <= 1e-8 max|v| (fine grid)
  std::vector<double> grid_convergence;  // |fine - coarse| / 3

  /// Number of leading states that pass the boundary check.
  int converged() const;
};

/// Lowest k eigenvalues of -d^2/dx^2 + V from the 3-point discretization on
/// grid and grid.refined(), extrapolated as (4 fine - coarse) / 3. Throws
/// SingularPotentialError at the first node where V is not finite.
SpectralReport solve_bound_states(const Function1D& V, const Grid& grid, int k);

/// Eigenvalues of the discrete operator on one grid (no extrapolation).
std::vector<double> discrete_eigenvalues(const Function1D& V, const Grid& grid, int k);

/// (E(n) - E(2n+1)) / (E(2n+1) - E(4n+3)) for one state; about 4 for a
/// second-order scheme.
double richardson_ratio(const Function1D& V, const Grid& grid, int state);

struct IsospectralityReport {
  double shift = 0.0;          // mean of a_i - b_i
  double max_deviation = 0.0;  // max |a_i - b_i - shift|
  std::vector<double> levels_a;
  std::vector<double> levels_b;
};

/// Compares levels skip_a .. skip_a + k - 1 of V_a with skip_b .. of V_b.
IsospectralityReport isospectrality_report(const Function1D& V_a, const Function1D& V_b, const Grid& grid, int k,
                                           int skip_a = 0, int skip_b = 0);

struct ResidualReport {
  double max_residual = 0.0;
  int evaluated = 0;
  int skipped = 0;          // samples at singular points or nodes
  bool degenerate = false;  // psi vanished on every sample
};

/// max |-psi'' + (V - E) psi| / ((|E| + 1) max|psi|), with psi'' from
/// 5-point differences of the analytic psi'.
ResidualReport schrodinger_residual(const Function1D& psi, double E, const Function1D& V,
                                    const std::vector<double>& samples);

/// max |Q^2 - Q' - V + E| with Q = -psi'/psi. Samples where psi = 0 are skipped.
ResidualReport qhj_residual(const Function1D& psi, double E, const Function1D& V, const std::vector<double>& samples);

struct RegularityReport {
  bool regular = true;
  std::vector<double> points;      // poles of the extension in the physical domain
  std::optional<int> rule_count;   // zeros predicted by the Laguerre zero classification
  std::optional<int> range_count;  // zeros predicted by the "m odd and -m-1/2 < a < -m" statement
  std::vector<std::string> findings;
};

/// Scans the seed for zeros in the physical domain and cross-checks the count
/// against the classical zero theorems. Disagreements go to findings.
RegularityReport classify_regularity(const Family& f, int k, int m, std::optional<Process> process = std::nullopt);

}  // namespace isoshift
