// Command-line front end. Every subcommand prints JSON lines on stdout.
// Exit codes: 0 success, 1 verification or trace failure, 2 usage error, 3 unsupported case.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "p3wkb/borel.hpp"
#include "p3wkb/config.hpp"
#include "p3wkb/errors.hpp"
#include "p3wkb/geometry.hpp"
#include "p3wkb/verify.hpp"
#include "p3wkb/voros.hpp"
#include "p3wkb/walls.hpp"

using json = nlohmann::json;
using namespace p3wkb;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3;

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json parameter_json(const RunConfig& cfg) {
  if (cfg.equation == Equation::D7) return {{"equation", "D7"}, {"c", cjson(cfg.c)}};
  return {{"equation", "D6"}, {"c_inf", cjson(cfg.c_inf)}, {"c_0", cjson(cfg.c_0)}};
}

int run_geometry(const RunConfig& cfg) {
  std::string format;
  if (!cfg.out.empty()) {
    const auto dot = cfg.out.rfind('.');
    format = dot == std::string::npos ? "" : cfg.out.substr(dot + 1);
    if (format != "svg" && format != "json") throw DomainError("--out must end in .svg or .json");
  }
  const QuadDiff qd = cfg.equation == Equation::D7 ? QuadDiff::d7(D7Parameters::make(cfg.c))
                                                   : QuadDiff::d6(cfg.parameters());
  const StokesDiagram d = trace_diagram(qd, cfg.trace);

  json j = parameter_json(cfg);
  j["command"] = "geometry";
  j["summary"] = d.summary();
  j["curves"] = d.curves.size();
  std::map<std::string, int> termini;
  int failed = 0;
  for (const auto& c : d.curves) {
    ++termini[c.terminus];
    if (c.terminus == "trace_error" || c.terminus == "arc_budget") ++failed;
  }
  j["termini"] = termini;
  j["degenerations"] = json::array();
  for (const auto& r : d.degenerations)
    j["degenerations"].push_back({{"kind", r.kind}, {"participants", r.participants}, {"diagnostic", r.diagnostic}});
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw DomainError("cannot write '" + cfg.out + "'");
    out << (format == "svg" ? render_svg(d) : render_json(d));
    j["out"] = cfg.out;
  }
  emit(j);
  if (failed) {
    std::cerr << "geometry: " << failed << " curve(s) ended in trace_error or arc_budget\n";
    return kFailed;
  }
  return kOk;
}

int run_voros(const RunConfig& cfg) {
  const EndpointSpec spec = EndpointSpec::parse(cfg.endpoint);
  if (cfg.n < 1) throw DomainError("--n must be at least 1");
  json j;
  VorosSeries closed;
  if (spec.equation == Equation::D7) {
    j = {{"equation", "D7"}, {"c", cjson(cfg.c)}};
    closed = voros_closed_form(spec, D7Parameters::make(cfg.c), cfg.n);
  } else {
    j = {{"equation", "D6"}, {"c_inf", cjson(cfg.c_inf)}, {"c_0", cjson(cfg.c_0)}};
    closed = voros_closed_form(spec, cfg.parameters(), cfg.n);
  }
  j["command"] = "voros";
  j["endpoint"] = spec.str();
  j["n"] = cfg.n;
  j["coefficient"] = cjson(closed.coefficient(cfg.n));
  j["provenance"] = "closed_form";
  if (cfg.oracle) {
    if (cfg.n > cfg.nmax) throw UnsupportedError("numeric oracle is limited to n <= " + std::to_string(cfg.nmax));
    OracleOptions opt;
    opt.loop_fraction = cfg.oracle_loop_fraction;
    opt.tol = cfg.oracle_tol;
    const OracleResult o = spec.equation == Equation::D7 ? voros_numeric_oracle(spec, D7Parameters::make(cfg.c), cfg.n, opt)
                                                         : voros_numeric_oracle(spec, cfg.parameters(), cfg.n, opt);
    const cplx c = closed.coefficient(cfg.n);
    j["oracle"] = cjson(o.value);
    j["oracle_abs_diff"] = std::abs(o.value - c);
    j["oracle_rel_diff"] = std::abs(o.value - c) / std::max(std::abs(c), 1e-300);
  }
  emit(j);
  return kOk;
}

int run_borel(const RunConfig& cfg) {
  const BorelKind kind = parse_borel_kind(cfg.kind);
  const Side side = parse_side(cfg.side);
  const BorelSumValue v = borel_sum(kind, cfg.c, cfg.eta, side);
  json j{{"command", "borel"}, {"kind", to_string(kind)}, {"c", cjson(cfg.c)},
         {"eta", cfg.eta},     {"side", to_string(side)},  {"summable", v.summable}};
  j["value"] = v.value ? cjson(*v.value) : json(nullptr);
  if (cfg.oracle) {
    // S_- is the Laplace integral for Re(c eta) > 0; S_+ follows from oddness for Re(c eta) < 0.
    const cplx z = cfg.c * cfg.eta;
    if (side == Side::Minus && z.real() > 0) {
      j["oracle"] = cjson(laplace_oracle(kind, cfg.c, cfg.eta));
    } else if (side == Side::Plus && z.real() < 0) {
      j["oracle"] = cjson(-laplace_oracle(kind, -cfg.c, cfg.eta));
    } else {
      throw UnsupportedError("Laplace oracle needs Re(c eta) > 0 for side - and Re(c eta) < 0 for side +");
    }
  }
  emit(j);
  return kOk;
}

int run_walls(const RunConfig& cfg) {
  const Parameters p{cfg.c_inf, cfg.c_0};
  const Stratum s = classify(p);
  json j{{"command", "walls"}, {"c_inf", cjson(p.c_inf)}, {"c_0", cjson(p.c_0)}, {"stratum", s.label()}};
  json jump = json::array();
  for (Coefficient c : jumping_coefficients(s)) jump.push_back(to_string(c));
  j["jumping"] = jump;
  const auto r = summability_report(p);
  j["summable"] = {{"F(c_p)", r.F_cp}, {"F(c_m)", r.F_cm}, {"G(c_inf)", r.G_cinf}, {"G(c_0)", r.G_c0}};
  if (!cfg.position.empty()) {
    const auto m = connection_multiplier(s.label(), parse_position(cfg.position), p, cfg.eta, cfg.power);
    j["position"] = to_string(m.position);
    j["eta"] = cfg.eta;
    j["multiplier"] = {{"expression", m.expression}, {"value", cjson(m.value)}};
  }
  emit(j);
  return kOk;
}

int run_verify(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite(cfg.suite);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.ok) ++failed;
    emit({{"command", "verify"}, {"suite", r.suite},        {"name", r.name},       {"criterion", r.criterion},
          {"ok", r.ok},          {"measured", r.measured},  {"tolerance", r.tolerance}, {"seconds", r.seconds},
          {"detail", r.detail}});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit({{"command", "verify"}, {"suite", cfg.suite}, {"checks", results.size()}, {"failed", failed}, {"seconds", secs}});
  return failed ? kFailed : kOk;
}

int report(const std::string& kind, const std::string& what, int code) {
  std::cerr << "error: " << what << "\n";
  emit({{"error", what}, {"kind", kind}});
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact WKB data of the Painleve III equations of type D6 and D7"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; flags given on the command line win");

  // Every option is collected as text and routed through RunConfig::set.
  std::map<std::string, std::string> given;
  std::map<std::string, CLI::Option*> options;
  auto opt = [&](CLI::App* sub, const std::string& key, const std::string& help) {
    options[sub->get_name() + "/" + key] = sub->add_option("--" + key, given[sub->get_name() + "/" + key], help);
  };
  auto flag = [&](CLI::App* sub, const std::string& key, const std::string& help) {
    options[sub->get_name() + "/" + key] = sub->add_flag("--" + key, help);
  };
  auto parameters = [&](CLI::App* sub) {
    opt(sub, "c-inf", "c_inf as a+bi");
    opt(sub, "c-0", "c_0 as a+bi");
  };

  auto* geometry = app.add_subcommand("geometry", "trace the Stokes diagram and report degenerations");
  parameters(geometry);
  flag(geometry, "d7", "use the D7 equation with parameter --c");
  opt(geometry, "c", "D7 parameter c as a+bi");
  opt(geometry, "out", "write the diagram to FILE.svg or FILE.json");
  for (const char* k : {"eps-trace", "eps-deg", "r-cap", "escape-factor", "arc-factor", "trace-rtol"})
    opt(geometry, k, "tracer setting");

  auto* voros = app.add_subcommand("voros", "Voros coefficient of eta^{1-2n}");
  opt(voros, "endpoint", "endpoint such as d6:inf3:+ or d7:zero_c:-");
  opt(voros, "n", "order n >= 1");
  parameters(voros);
  opt(voros, "c", "D7 parameter c as a+bi");
  flag(voros, "oracle", "also evaluate the numeric contour-integral oracle");
  opt(voros, "nmax", "largest n accepted by the oracle");
  opt(voros, "oracle-tol", "oracle quadrature tolerance");
  opt(voros, "loop-fraction", "oracle loop radius relative to the nearest special point");

  auto* borel = app.add_subcommand("borel", "lateral Borel sum of F or G");
  opt(borel, "kind", "F or G");
  opt(borel, "c", "argument c as a+bi");
  opt(borel, "eta", "eta > 0");
  opt(borel, "side", "+ or -");
  flag(borel, "oracle", "also evaluate the Laplace integral");

  auto* walls = app.add_subcommand("walls", "wall or chamber of the parameters, and connection multipliers");
  parameters(walls);
  opt(walls, "position", "t0, t1, inside-triangle, outside-triangle, inside-loop or outside-loop");
  opt(walls, "eta", "eta for the multiplier");
  opt(walls, "power", "exponent +1 or -1 of the W4 multiplier");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  opt(verify, "suite", "all, series, voros, borel, geometry or asymptotics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    for (const auto& [id, o] : options) {
      const auto slash = id.find('/');
      if (id.substr(0, slash) != sub->get_name() || o->count() == 0) continue;
      const std::string key = id.substr(slash + 1);
      cfg.set(key, o->get_expected_min() == 0 ? "true" : given[id]);
    }
    if (sub == geometry) return run_geometry(cfg);
    if (sub == voros) return run_voros(cfg);
    if (sub == borel) return run_borel(cfg);
    if (sub == walls) return run_walls(cfg);
    return run_verify(cfg);
  } catch (const UnsupportedError& e) {
    return report("unsupported", e.what(), kUnsupported);
  } catch (const TraceError& e) {
    return report("trace", e.what(), kFailed);
  } catch (const Error& e) {
    return report("usage", e.what(), kUsage);
  }
}
