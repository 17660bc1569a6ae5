#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p3wkb/algebra.hpp"
#include "p3wkb/geometry.hpp"
#include "p3wkb/series.hpp"

namespace p3wkb {

// Settings shared by the command line and the config file. Keys are the long flag
// names without dashes, e.g. "c-inf = 2+1i" in a file is the same as --c-inf 2+1i.
struct RunConfig {
  Equation equation = Equation::D6;
  cplx c_inf{2.0, 1.0};
  cplx c_0{3.0, 0.0};
  cplx c{0.0, 1.0};  // D7
  double eta = 1.0;
  int eta_order = 6;
  int jet_order = 10;
  int nmax = 3;  // largest Voros order served by the numeric oracle
  TraceOptions trace;
  double oracle_tol = 1e-10;
  double oracle_loop_fraction = 0.6;

  std::string out;  // geometry output, .svg or .json
  std::string endpoint = "d6:inf3:+";
  int n = 1;
  bool oracle = false;
  std::string kind = "G";
  std::string side = "-";
  std::string suite = "all";
  std::string position;  // walls: connection multiplier at this position
  int power = 1;

  // Sets one key. Throws DomainError for unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);
  Parameters parameters() const { return Parameters::make(c_inf, c_0); }

  static std::vector<std::string> keys();
};

// Reads "key = value" lines; blank lines and lines starting with '#' are skipped.
// Throws DomainError with the line number on a malformed line.
std::vector<std::pair<std::string, std::string>> read_config_entries(const std::string& path);

// Defaults overridden by the file at `path`.
RunConfig load_config(const std::string& path);

}  // namespace p3wkb
