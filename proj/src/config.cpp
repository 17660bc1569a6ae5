#include "p3wkb/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include "p3wkb/errors.hpp"

namespace p3wkb {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw DomainError(key + ": expected a number, got '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_real(key, v);
  if (x != static_cast<int>(x)) throw DomainError(key + ": expected an integer, got '" + v + "'");
  return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v.empty()) return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DomainError(key + ": expected true or false, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> m{
      {"c-inf", [](RunConfig& c, auto&, auto& v) { c.c_inf = parse_complex(v); }},
      {"c-0", [](RunConfig& c, auto&, auto& v) { c.c_0 = parse_complex(v); }},
      {"c", [](RunConfig& c, auto&, auto& v) { c.c = parse_complex(v); }},
      {"d7", [](RunConfig& c, auto& k, auto& v) { c.equation = to_bool(k, v) ? Equation::D7 : Equation::D6; }},
      {"eta", [](RunConfig& c, auto& k, auto& v) { c.eta = to_real(k, v); }},
      {"eta-order", [](RunConfig& c, auto& k, auto& v) { c.eta_order = to_int(k, v); }},
      {"jet-order", [](RunConfig& c, auto& k, auto& v) { c.jet_order = to_int(k, v); }},
      {"nmax", [](RunConfig& c, auto& k, auto& v) { c.nmax = to_int(k, v); }},
      {"eps-trace", [](RunConfig& c, auto& k, auto& v) { c.trace.eps_trace = to_real(k, v); }},
      {"eps-deg", [](RunConfig& c, auto& k, auto& v) { c.trace.eps_deg = to_real(k, v); }},
      {"r-cap", [](RunConfig& c, auto& k, auto& v) { c.trace.r_cap = to_real(k, v); }},
      {"escape-factor", [](RunConfig& c, auto& k, auto& v) { c.trace.escape_factor = to_real(k, v); }},
      {"arc-factor", [](RunConfig& c, auto& k, auto& v) { c.trace.arc_factor = to_real(k, v); }},
      {"trace-rtol", [](RunConfig& c, auto& k, auto& v) { c.trace.rtol = to_real(k, v); }},
      {"oracle-tol", [](RunConfig& c, auto& k, auto& v) { c.oracle_tol = to_real(k, v); }},
      {"loop-fraction", [](RunConfig& c, auto& k, auto& v) { c.oracle_loop_fraction = to_real(k, v); }},
      {"out", [](RunConfig& c, auto&, auto& v) { c.out = v; }},
      {"endpoint", [](RunConfig& c, auto&, auto& v) { c.endpoint = v; }},
      {"n", [](RunConfig& c, auto& k, auto& v) { c.n = to_int(k, v); }},
      {"oracle", [](RunConfig& c, auto& k, auto& v) { c.oracle = to_bool(k, v); }},
      {"kind", [](RunConfig& c, auto&, auto& v) { c.kind = v; }},
      {"side", [](RunConfig& c, auto&, auto& v) { c.side = v; }},
      {"suite", [](RunConfig& c, auto&, auto& v) { c.suite = v; }},
      {"position", [](RunConfig& c, auto&, auto& v) { c.position = v; }},
      {"power", [](RunConfig& c, auto& k, auto& v) { c.power = to_int(k, v); }},
  };
  return m;
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw DomainError("unknown config key '" + key + "'");
  it->second(*this, key, value);
}

std::vector<std::string> RunConfig::keys() {
  std::vector<std::string> out;
  for (const auto& [k, s] : setters()) out.push_back(k);
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_entries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw DomainError(path + ":" + std::to_string(no) + ": expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.emplace_back(key, trim(s.substr(eq + 1)));
  }
  return out;
}

RunConfig load_config(const std::string& path) {
  RunConfig c;
  for (const auto& [k, v] : read_config_entries(path)) c.set(k, v);
  return c;
}

}  // namespace p3wkb
