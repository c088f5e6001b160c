#include "isoshift/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "isoshift/deform.hpp"
#include "isoshift/eop.hpp"
#include "isoshift/errors.hpp"
#include "isoshift/spectral.hpp"

namespace isoshift::cli {

namespace fs = std::filesystem;

void validate(const RunConfig& c) {
  if (c.family != "radial_oscillator" && c.family != "trig_dpt") {
    throw ConfigError("unknown family '" + c.family + "'");
  }
  if (c.branches.empty()) throw ConfigError("branch list is empty");
  for (int k : c.branches) {
    if (k < 1 || k > 4) throw ConfigError("branch index must be 1..4");
  }
  if (c.m_list.empty()) throw ConfigError("m list is empty");
  for (int m : c.m_list) {
    if (m < 0) throw ConfigError("m must be >= 0");
  }
  if (c.n_max < 0) throw ConfigError("nmax must be >= 0");
  if (c.grid_points < 2) throw ConfigError("grid-points must be >= 2");
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
  for (double R : c.R_values) {
    if (!std::isfinite(R)) throw ConfigError("R values must be finite");
  }
  isoshift::validate(make_family(c));
}

Family make_family(const RunConfig& c) {
  if (c.family == "radial_oscillator") return RadialOscillator{c.omega, c.ell};
  if (c.family == "trig_dpt") return TrigDPT{c.A, c.B};
  throw ConfigError("unknown family '" + c.family + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void Table::add(std::string name, std::vector<double> values) {
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

std::string Table::to_csv() const {
  std::string s;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j) s += ',';
    s += names[j];
  }
  s += '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) s += ',';
      s += format_double(columns[j][i]);
    }
    s += '\n';
  }
  return s;
}

Json Table::to_json() const {
  Json t = Json::object();
  for (std::size_t j = 0; j < names.size(); ++j) {
    Json col = Json::array();
    for (double v : columns[j]) {
      if (std::isfinite(v)) {
        col.push_back(v);
      } else {
        col.push_back(nullptr);
      }
    }
    t[names[j]] = std::move(col);
  }
  return t;
}

namespace {

Json params_json(const Family& f) {
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) return Json{{"omega", ro->omega}, {"ell", ro->ell}};
  const auto& d = std::get<TrigDPT>(f);
  return Json{{"A", d.A}, {"B", d.B}};
}

const char* process_name(Process p) { return p == Process::first ? "first" : "second"; }

std::vector<double> sample(const Function1D& f, const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(f(x));
  return out;
}

Json finite_list(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

// Series whose eigenfunctions belong to V~- of RO branch k. L2 needs the
// second process on branch 2, which the default processes never select.
std::optional<Series> series_of(int k, Process p) {
  if (p != Process::first) return std::nullopt;
  return series_for_branch(k);
}

}  // namespace

std::vector<double> output_grid(const RunConfig& c) {
  const Family f = make_family(c);
  const Interval dom = default_domain(f);
  double lo, hi;
  if (const auto* ro = std::get_if<RadialOscillator>(&f)) {
    lo = 0.1 / std::sqrt(ro->omega);
    hi = c.rmax.value_or(10.0 / std::sqrt(ro->omega));
  } else {
    lo = 0.05;
    hi = c.rmax.value_or(0.5 * std::numbers::pi - 0.05);
  }
  if (!(hi > lo) || !dom.contains(hi)) throw ConfigError("rmax must lie inside the domain and above " + format_double(lo));
  return linspace(lo, hi, c.grid_points);
}

ExtendResult build_extend(const RunConfig& c, int k, int m) {
  const Family f = make_family(c);
  const Deformation d = make_deformation(f, k, m);
  const ExtensionPair e = extend(d);
  const auto xs = output_grid(c);

  ExtendResult res;
  res.table.add(is_radial(f) ? "r" : "x", xs);
  res.table.add("V_minus", sample(e.V_minus, xs));
  res.table.add("V_tilde_minus", sample(e.V_tilde_minus, xs));
  res.table.add("V_tilde_plus", sample(e.V_tilde_plus, xs));

  Json& j = res.sidecar;
  j["command"] = "extend";
  j["family"] = family_name(f);
  j["params"] = params_json(f);
  j["branch"] = k;
  j["m"] = m;
  j["process"] = process_name(d.process);
  j["shift"] = e.shift;
  j["singular_points"] = finite_list(e.singular_points);
  const RegularityReport reg = classify_regularity(f, k, m, d.process);
  j["regular"] = reg.regular;
  if (!reg.findings.empty()) j["regularity_findings"] = reg.findings;
  if (!reg.regular && e.singular_points.empty()) j["warning"] = "extension is not regular: " + reg.findings.front();
  j["grid"] = Json{{"lo", xs.front()}, {"hi", xs.back()}, {"points", xs.size()}};

  Json eig;
  const auto series = is_radial(f) ? series_of(k, d.process) : std::nullopt;
  if (!e.singular_points.empty()) {
    eig["skipped"] = "singular extension: seed has zeros in the physical domain";
    j["warning"] = "extension is singular at " + format_double(e.singular_points.front()) +
                   "; eigenfunction tables skipped";
  } else if (!is_radial(f)) {
    eig["skipped"] = "closed-form eigenfunctions are implemented for the radial oscillator only";
  } else if (!series) {
    eig["skipped"] = "no polynomial eigenfunctions for this branch and process";
  } else {
    const auto& p = std::get<RadialOscillator>(f);
    try {
      Json energies = Json::array();
      std::vector<std::pair<std::string, std::vector<double>>> cols;
      for (int n = 0; n <= c.n_max; ++n) {
        const EOPSpec s{*series, n, m, p};
        isoshift::validate(s);
        std::vector<double> psi;
        psi.reserve(xs.size());
        for (double x : xs) psi.push_back(eigenfunction_closed_form(s, x));
        cols.emplace_back("psi_" + std::to_string(n), std::move(psi));
        energies.push_back(eop_energy(s));
      }
      for (auto& [name, v] : cols) res.table.add(name, std::move(v));
      eig["series"] = series_name(*series);
      eig["potential"] = "V_tilde_minus";
      eig["energies"] = energies;
    } catch (const DegenerateParameterError& ex) {
      eig = Json{{"skipped", ex.what()}};
    }
  }
  j["eigenfunctions"] = eig;
  j["columns"] = res.table.names;
  return res;
}

ExtendResult build_interpolate(const RunConfig& c, int k) {
  const Family f = make_family(c);
  if (!is_radial(f)) throw ConfigError("interpolate supports the radial oscillator only");
  if (c.R_values.empty()) throw ConfigError("interpolate needs at least one R value");
  const auto& p = std::get<RadialOscillator>(f);
  const auto xs = output_grid(c);

  ExtendResult res;
  res.table.add("r", xs);
  res.table.add("V_minus", sample(partner_potentials(superpotential(f, k)).minus, xs));
  Json meta = Json::array();
  for (double R : c.R_values) {
    const ExtensionPair e = extend_general_R(p, k, R);
    const std::string name = "V_tilde_minus[R=" + format_double(R) + "]";
    res.table.add(name, sample(e.V_tilde_minus, xs));
    Json col{{"name", name}, {"R", R}, {"singular", !e.singular_points.empty()}};
    if (!e.singular_points.empty()) col["singular_points"] = finite_list(e.singular_points);
    meta.push_back(std::move(col));
  }
  Json& j = res.sidecar;
  j["command"] = "interpolate";
  j["family"] = family_name(f);
  j["params"] = params_json(f);
  j["branch"] = k;
  j["grid"] = Json{{"lo", xs.front()}, {"hi", xs.back()}, {"points", xs.size()}};
  j["curves"] = meta;
  j["columns"] = res.table.names;
  return res;
}

Json catalog_json(const Family& f) {
  Json rows = Json::array();
  for (int k = 1; k <= 4; ++k) {
    const Branch b = branch(f, k);
    rows.push_back(Json{{"branch", k},
                        {"a", b.a},
                        {"b", b.b},
                        {"factorization_energy", b.factorization_energy},
                        {"qhj_constant", b.qhj_constant()},
                        {"susy", b.susy_kind == SusyKind::exact ? "exact" : "broken"}});
  }
  return Json{{"family", family_name(f)}, {"params", params_json(f)}, {"branches", rows}};
}

std::string catalog_csv(const Family& f) {
  std::string s = "branch,a,b,factorization_energy,qhj_constant,susy\n";
  for (int k = 1; k <= 4; ++k) {
    const Branch b = branch(f, k);
    s += std::to_string(k) + ',' + format_double(b.a) + ',' + format_double(b.b) + ',' +
         format_double(b.factorization_energy) + ',' + format_double(b.qhj_constant()) + ',' +
         (b.susy_kind == SusyKind::exact ? "exact" : "broken") + '\n';
  }
  return s;
}

// ---- certify ----

namespace {

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  std::string status;  // pass, fail, skipped
  std::string reason;
  Json extra = Json::object();

  Json to_json() const {
    Json j{{"name", name}, {"status", status}};
    if (status != "skipped") {
      j["value"] = value;
      j["tolerance"] = tolerance;
    }
    if (!reason.empty()) j["reason"] = reason;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
  }
};

Check measured(std::string name, double value, double tol) {
  Check c{std::move(name), value, tol, (value <= tol) ? "pass" : "fail", "", Json::object()};
  if (!std::isfinite(value)) c.status = "fail";
  return c;
}

Check skipped(std::string name, std::string reason) {
  return Check{std::move(name), 0.0, 0.0, "skipped", std::move(reason), Json::object()};
}

Check failed(std::string name, std::string reason) {
  return Check{std::move(name), 0.0, 0.0, "fail", std::move(reason), Json::object()};
}

struct Cell {
  Json json;
  std::optional<std::string> first_failure;
};

Cell certify_cell(const RunConfig& cfg, int k, int m) {
  const auto t0 = std::chrono::steady_clock::now();
  const Family f = make_family(cfg);
  const Deformation d = make_deformation(f, k, m);
  const double R = d.R;
  const auto grid = regular_points(certification_grid(f), d.singular_points, singular_margin(f));
  const RegularityReport reg = classify_regularity(f, k, m, d.process);
  const bool regular = reg.regular;

  std::vector<Check> checks;
  checks.push_back(measured("riccati_residual", riccati_residual(d, grid), 1e-9 * (1.0 + std::abs(R))));

  std::optional<ExtensionPair> e;
  try {
    e = extend(d);
    checks.push_back(measured("partner_shift_deviation", partner_shift_deviation(*e, grid), 1e-10 * (1.0 + std::abs(R))));
  } catch (const InternalInconsistency& ex) {
    checks.push_back(failed("partner_shift_deviation", ex.what()));
  }

  if (!regular) {
    checks.push_back(skipped("isospectrality", "singular extension"));
  } else if (!e) {
    checks.push_back(skipped("isospectrality", "extension failed"));
  } else {
    // Zero modes of V- and V~- are dropped; the rest must differ by a constant.
    const int skip = (d.process == Process::first && minus_zero_mode(f, d.branch)) ? 1 : 0;
    const int levels = 6;
    try {
      const auto iso = isospectrality_report(e->V_tilde_minus, e->V_minus, default_grid(f, levels + skip, m), levels,
                                             skip, skip);
      Check c = measured("isospectrality", iso.max_deviation, 1e-4);
      c.extra["shift"] = iso.shift;
      c.extra["levels_skipped"] = skip;
      checks.push_back(std::move(c));
    } catch (const SingularPotentialError& ex) {
      checks.push_back(failed("isospectrality", ex.what()));
    }
  }

  const auto series = is_radial(f) ? series_of(k, d.process) : std::nullopt;
  const auto* ro = std::get_if<RadialOscillator>(&f);
  auto eop_ok = [&](std::string& why) {
    if (!ro) {
      why = "exceptional polynomials are implemented for the radial oscillator only";
    } else if (!series) {
      why = "no polynomial series for this branch and process";
    } else if (!regular) {
      why = "weight has a pole in the physical domain";
    } else {
      try {
        for (int n = 0; n <= cfg.n_max; ++n) isoshift::validate(EOPSpec{*series, n, m, *ro});
        return true;
      } catch (const DegenerateParameterError& ex) {
        why = ex.what();
      }
    }
    return false;
  };
  std::string why;
  if (eop_ok(why)) {
    const GramReport g = gram_matrix(*series, m, *ro, cfg.n_max);
    Check c = measured("gram_offdiag", g.max_offdiag, 1e-8);
    c.extra["tail_bound"] = g.tail_bound;
    checks.push_back(std::move(c));

    Json census = Json::array();
    int mismatches = 0;
    for (int n = 0; n <= cfg.n_max; ++n) {
      const ZeroCensus z = zero_census(EOPSpec{*series, n, m, *ro});
      census.push_back(Json{{"n", n}, {"inside", z.inside}, {"outside", z.outside()}, {"degree", z.degree}});
      if (z.inside != n || z.flagged) ++mismatches;
    }
    Check c2 = measured("zero_census", mismatches, 0.0);
    c2.extra["counts"] = census;
    checks.push_back(std::move(c2));
  } else {
    checks.push_back(skipped("gram_offdiag", why));
    checks.push_back(skipped("zero_census", why));
  }

  if (!ro) {
    checks.push_back(skipped("w0_consistency", "defined for the radial oscillator only"));
  } else if (k != 2) {
    checks.push_back(skipped("w0_consistency", "pairs the branch 2 and branch 3 extensions; reported on branch 2 cells"));
  } else {
    const W0Consistency w = w0_consistency(*ro, m, certification_grid(f));
    Check c = measured("w0_consistency", w.worst(), 1e-9);
    c.extra["components"] = Json{{"minus", w.minus}, {"plus", w.plus}, {"ground_state", w.ground_state}, {"xi", w.xi}};
    c.extra["xi_difference_form"] = w.xi_difference;
    checks.push_back(std::move(c));
  }

  Cell cell;
  Json& j = cell.json;
  j["branch"] = k;
  j["m"] = m;
  j["process"] = process_name(d.process);
  j["shift"] = R;
  Json rj{{"class", regular ? "regular" : "singular"}, {"points", finite_list(reg.points)}};
  rj["rule_count"] = reg.rule_count ? Json(*reg.rule_count) : Json(nullptr);
  rj["range_count"] = reg.range_count ? Json(*reg.range_count) : Json(nullptr);
  rj["findings"] = reg.findings;
  j["regularity"] = rj;
  Json cj = Json::array();
  for (const auto& c : checks) {
    cj.push_back(c.to_json());
    if (c.status == "fail" && !cell.first_failure) {
      cell.first_failure = "branch " + std::to_string(k) + " m=" + std::to_string(m) + ": " + c.name;
    }
  }
  j["checks"] = cj;
  if (cfg.timing) {
    j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return cell;
}

}  // namespace

CertifyResult build_certify(const RunConfig& c) {
  const Family f = make_family(c);
  std::vector<std::future<Cell>> jobs;
  for (int k : c.branches) {
    for (int m : c.m_list) jobs.push_back(std::async(std::launch::async, certify_cell, std::cref(c), k, m));
  }
  CertifyResult res;
  Json cells = Json::array();
  for (auto& job : jobs) {
    Cell cell = job.get();
    if (cell.first_failure && !res.first_failure) res.first_failure = cell.first_failure;
    cells.push_back(std::move(cell.json));
  }
  Json& r = res.report;
  r["command"] = "certify";
  r["family"] = family_name(f);
  r["params"] = params_json(f);
  r["n_max"] = c.n_max;
  r["cells"] = cells;
  r["status"] = res.first_failure ? "fail" : "pass";
  r["first_failure"] = res.first_failure ? Json(*res.first_failure) : Json(nullptr);
  return res;
}

// ---- command line ----

namespace {

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + p.string());
  os << content;
}

template <class T>
std::vector<T> as_list(const Json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

void apply_file(RunConfig& c, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path);
  Json j;
  try {
    j = Json::parse(is);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const Json& v = it.value();
      if (key == "family") {
        c.family = v.get<std::string>();
      } else if (key == "branch") {
        c.branches = as_list<int>(v);
      } else if (key == "m") {
        c.m_list = as_list<int>(v);
      } else if (key == "omega") {
        c.omega = v.get<double>();
      } else if (key == "ell") {
        c.ell = v.get<double>();
      } else if (key == "A") {
        c.A = v.get<double>();
      } else if (key == "B") {
        c.B = v.get<double>();
      } else if (key == "nmax") {
        c.n_max = v.get<int>();
      } else if (key == "grid_points") {
        c.grid_points = v.get<int>();
      } else if (key == "rmax") {
        c.rmax = v.get<double>();
      } else if (key == "out") {
        c.out_dir = v.get<std::string>();
      } else if (key == "format") {
        c.format = v.get<std::string>();
      } else if (key == "R") {
        c.R_values = as_list<double>(v);
      } else if (key == "timing") {
        c.timing = v.get<bool>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::type_error& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

// Flag values; applied over the config file only when given.
struct Flags {
  std::string family;
  std::vector<int> branches;
  std::vector<int> m_list;
  double omega = 0, ell = 0, A = 0, B = 0, rmax = 0;
  int n_max = 0, grid_points = 0;
  std::string out, format, config;
  std::vector<double> R;
  bool no_timing = false;
};

struct Options {
  CLI::App* app = nullptr;
  CLI::Option *family = nullptr, *positional = nullptr, *branch = nullptr, *m = nullptr, *omega = nullptr,
              *ell = nullptr, *A = nullptr, *B = nullptr, *nmax = nullptr, *grid = nullptr, *rmax = nullptr,
              *out = nullptr, *format = nullptr, *config = nullptr, *R = nullptr, *no_timing = nullptr;
};

Options add_common(CLI::App* sub, Flags& f) {
  Options o;
  o.app = sub;
  o.family = sub->add_option("--family", f.family, "radial_oscillator or trig_dpt");
  o.branch = sub->add_option("--branch", f.branches, "branch index 1..4 (repeat or comma-separate)")->delimiter(',');
  o.m = sub->add_option("--m", f.m_list, "hierarchy index (repeat or comma-separate)")->delimiter(',');
  o.omega = sub->add_option("--omega", f.omega, "oscillator frequency");
  o.ell = sub->add_option("--ell", f.ell, "angular momentum");
  o.A = sub->add_option("--A", f.A, "DPT parameter A");
  o.B = sub->add_option("--B", f.B, "DPT parameter B");
  o.nmax = sub->add_option("--nmax", f.n_max, "highest state index");
  o.grid = sub->add_option("--grid-points", f.grid_points, "output grid size");
  o.rmax = sub->add_option("--rmax", f.rmax, "upper end of the output grid");
  o.out = sub->add_option("--out", f.out, "output directory");
  o.format = sub->add_option("--format", f.format, "json or csv");
  o.config = sub->add_option("--config", f.config, "JSON config file (flags override it)");
  return o;
}

RunConfig resolve(const Options& o, const Flags& f) {
  RunConfig c;
  if (*o.config) apply_file(c, f.config);
  if (o.positional && *o.positional) c.family = f.family;
  if (*o.family) c.family = f.family;
  if (*o.branch) c.branches = f.branches;
  if (*o.m) c.m_list = f.m_list;
  if (*o.omega) c.omega = f.omega;
  if (*o.ell) c.ell = f.ell;
  if (*o.A) c.A = f.A;
  if (*o.B) c.B = f.B;
  if (*o.nmax) c.n_max = f.n_max;
  if (*o.grid) c.grid_points = f.grid_points;
  if (*o.rmax) c.rmax = f.rmax;
  if (*o.out) c.out_dir = f.out;
  if (*o.format) c.format = f.format;
  if (o.R && *o.R) c.R_values = f.R;
  if (o.no_timing && *o.no_timing) c.timing = false;
  validate(c);
  return c;
}

std::string base_name(const RunConfig& c, const std::string& cmd, int k, std::optional<int> m) {
  std::string s = cmd + "_" + c.family + "_b" + std::to_string(k);
  if (m) s += "_m" + std::to_string(*m);
  return s;
}

void emit_table(const RunConfig& c, const std::string& stem, const ExtendResult& r, std::ostream& out) {
  const fs::path dir = c.out_dir.empty() ? fs::path(".") : fs::path(c.out_dir);
  fs::create_directories(dir);
  if (c.format == "csv") {
    write_file(dir / (stem + ".csv"), r.table.to_csv());
    write_file(dir / (stem + ".json"), r.sidecar.dump(2) + "\n");
    out << (dir / (stem + ".csv")).string() << "\n";
  } else {
    Json j = r.sidecar;
    j["table"] = r.table.to_json();
    write_file(dir / (stem + ".json"), j.dump(2) + "\n");
  }
  out << (dir / (stem + ".json")).string() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isospectral shift deformations of the radial oscillator and trigonometric Poschl-Teller potentials"};
  app.name("isoshift");
  app.require_subcommand(1);
  Flags flags;

  CLI::App* cat = app.add_subcommand("catalog", "list the four superpotential branches");
  Options ocat = add_common(cat, flags);
  ocat.positional = cat->add_option("family_name", flags.family, "family");

  CLI::App* ext = app.add_subcommand("extend", "tabulate extended potentials and eigenfunctions");
  Options oext = add_common(ext, flags);

  CLI::App* cer = app.add_subcommand("certify", "run the invariant suite over a branch and m sweep");
  Options ocer = add_common(cer, flags);
  ocer.no_timing = cer->add_flag("--no-timing", flags.no_timing, "omit wall times (byte-stable report)");

  CLI::App* itp = app.add_subcommand("interpolate", "extended potentials for arbitrary R");
  Options oitp = add_common(itp, flags);
  oitp.R = itp->add_option("--R", flags.R, "deformation constants (comma-separated)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cat) {
      const RunConfig c = resolve(ocat, flags);
      const Family f = make_family(c);
      const std::string text = c.format == "json" ? catalog_json(f).dump(2) + "\n" : catalog_csv(f);
      if (!c.out_dir.empty()) {
        fs::create_directories(c.out_dir);
        write_file(fs::path(c.out_dir) / ("catalog_" + c.family + (c.format == "json" ? ".json" : ".csv")), text);
      }
      out << text;
      return 0;
    }
    if (*ext) {
      const RunConfig c = resolve(oext, flags);
      for (int k : c.branches) {
        for (int m : c.m_list) {
          const ExtendResult r = build_extend(c, k, m);
          if (r.sidecar.contains("warning")) err << "warning: " << r.sidecar["warning"].get<std::string>() << "\n";
          emit_table(c, base_name(c, "extend", k, m), r, out);
        }
      }
      return 0;
    }
    if (*itp) {
      const RunConfig c = resolve(oitp, flags);
      for (int k : c.branches) emit_table(c, base_name(c, "interpolate", k, std::nullopt), build_interpolate(c, k), out);
      return 0;
    }
    if (*cer) {
      const RunConfig c = resolve(ocer, flags);
      const CertifyResult r = build_certify(c);
      const std::string text = r.report.dump(2) + "\n";
      if (c.out_dir.empty()) {
        out << text;
      } else {
        fs::create_directories(c.out_dir);
        const fs::path p = fs::path(c.out_dir) / ("certify_" + c.family + ".json");
        write_file(p, text);
        out << p.string() << "\n";
      }
      if (r.first_failure) {
        err << "certification failed: " << *r.first_failure << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace isoshift::cli
