#pragma once

// Batch front end: catalog listing, extension tables, certification sweeps and
// general-R interpolation.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isoshift/catalog.hpp"
#include "json.hpp"

namespace isoshift::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string family = "radial_oscillator";
  std::vector<int> branches{2};
  std::vector<int> m_list{1};
  double omega = 1.0;
  double ell = 1.0;
  double A = 1.0;
  double B = 1.0;
  int n_max = 3;
  int grid_points = 400;
  std::optional<double> rmax;
  std::string out_dir;  // empty: write to stdout where possible
  std::string format = "csv";
  std::vector<double> R_values;
  bool timing = true;
};

/// Throws ConfigError on an invalid configuration.
void validate(const RunConfig& c);
Family make_family(const RunConfig& c);

/// Shortest round-trip decimal.
std::string format_double(double v);

struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  void add(std::string name, std::vector<double> values);
  std::string to_csv() const;
  Json to_json() const;
};

/// Sample points of the output grid.
std::vector<double> output_grid(const RunConfig& c);

struct ExtendResult {
  Table table;
  Json sidecar;
};

ExtendResult build_extend(const RunConfig& c, int k, int m);
ExtendResult build_interpolate(const RunConfig& c, int k);
Json catalog_json(const Family& f);
std::string catalog_csv(const Family& f);

struct CertifyResult {
  Json report;
  std::optional<std::string> first_failure;
};

CertifyResult build_certify(const RunConfig& c);

/// Entry point. Returns the exit code: 0 success, 1 certification failure,
/// 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isoshift::cli
