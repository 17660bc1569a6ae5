#include "p3wkb/voros.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "p3wkb/errors.hpp"

namespace p3wkb {

namespace {

// Floor -2 nmax: the z^{-2 nmax} coefficient is known to vanish.
Laurent bernoulli_series(int nmax, bool f_kind) {
  if (nmax < 1) throw DomainError("series order must be >= 1");
  Laurent r(-2 * nmax);
  for (int n = 1; n <= nmax; ++n) {
    Rational c = bernoulli(2 * n) / Rational(2 * n * (2 * n - 1));
    if (f_kind) {
      Rational two_pow = 1;
      for (int k = 0; k < 2 * n - 1; ++k) two_pow *= 2;
      c *= Rational(1) / two_pow - 1;
    }
    r.set(1 - 2 * n, c);
  }
  return r;
}

cplx coefficient_at(const Laurent& s, int n) { return to_double(s.coeff(1 - 2 * n)); }

}  // namespace

Laurent f_series(int nmax) { return bernoulli_series(nmax, true); }
Laurent g_series(int nmax) { return bernoulli_series(nmax, false); }

// ---------------------------------------------------------------- endpoints

namespace {

const std::map<std::string, Target>& target_names() {
  static const std::map<std::string, Target> m{
      {"inf1", Target::Inf1},         {"inf2", Target::Inf2},       {"inf3", Target::Inf3},
      {"inf4", Target::Inf4},         {"zero_cinf", Target::ZeroCInf}, {"zero_c0", Target::ZeroC0},
      {"zero_c", Target::ZeroC}};
  return m;
}

std::string target_name(Target t) {
  for (const auto& [k, v] : target_names())
    if (v == t) return k;
  return "?";
}

bool is_infinity(Target t) {
  return t == Target::Inf1 || t == Target::Inf2 || t == Target::Inf3 || t == Target::Inf4;
}

}  // namespace

EndpointSpec EndpointSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string lower = boost::algorithm::to_lower_copy(boost::algorithm::trim_copy(text));
  boost::algorithm::split(parts, lower, boost::algorithm::is_any_of(":"));
  if (parts.size() != 3) throw DomainError("endpoint must look like d6:inf3:+, got '" + text + "'");
  EndpointSpec s;
  if (parts[0] == "d6")
    s.equation = Equation::D6;
  else if (parts[0] == "d7")
    s.equation = Equation::D7;
  else
    throw DomainError("unknown equation '" + parts[0] + "'");
  auto it = target_names().find(parts[1]);
  if (it == target_names().end()) throw DomainError("unknown endpoint '" + parts[1] + "'");
  s.target = it->second;
  if (parts[2] == "+")
    s.sign = 1;
  else if (parts[2] == "-")
    s.sign = -1;
  else
    throw DomainError("endpoint sign must be + or -");
  const bool d7_ok = s.target == Target::ZeroC || s.target == Target::Inf1 || s.target == Target::Inf2 ||
                     s.target == Target::Inf3;
  if (s.equation == Equation::D6 && s.target == Target::ZeroC)
    throw DomainError("zero_c is a D7 endpoint; D6 has zero_cinf and zero_c0");
  if (s.equation == Equation::D7 && !d7_ok) throw DomainError("D7 endpoints are inf1..inf3 and zero_c");
  return s;
}

std::string EndpointSpec::str() const {
  return std::string(equation == Equation::D6 ? "d6" : "d7") + ":" + target_name(target) + ":" +
         (sign > 0 ? "+" : "-");
}

cplx VorosSeries::coefficient(int n) const {
  for (const auto& [k, v] : terms)
    if (k == n) return v;
  return 0.0;
}

// ---------------------------------------------------------------- closed form

namespace {

struct Piece {
  bool f_kind;
  double weight;
  cplx arg;
};

VorosSeries assemble(const std::vector<Piece>& pieces, int sign, int nmax) {
  const Laurent f = f_series(nmax), g = g_series(nmax);
  VorosSeries out;
  for (int n = 1; n <= nmax; ++n) {
    cplx acc = 0.0;
    for (const auto& pc : pieces)
      acc += pc.weight * coefficient_at(pc.f_kind ? f : g, n) * std::pow(pc.arg, 1 - 2 * n);
    out.terms.emplace_back(n, double(sign) * acc);
  }
  return out;
}

}  // namespace

VorosSeries voros_closed_form(const EndpointSpec& spec, const Parameters& p, int nmax) {
  if (spec.equation != Equation::D6) throw DomainError("D6 parameters given for a D7 endpoint");
  if (auto why = p.genericity_violation(); !why.empty()) throw DegenerateError("non-generic parameters: " + why);
  std::vector<Piece> pieces;
  switch (spec.target) {
    case Target::Inf1:
    case Target::Inf2: pieces = {{true, 1, p.c_p()}}; break;
    case Target::Inf3:
    case Target::Inf4: pieces = {{true, 1, p.c_m()}}; break;
    case Target::ZeroCInf: pieces = {{true, 1, p.c_p()}, {true, 1, p.c_m()}, {false, -3, p.c_inf}}; break;
    case Target::ZeroC0: pieces = {{true, 1, p.c_p()}, {true, -1, p.c_m()}, {false, -3, p.c_0}}; break;
    case Target::ZeroC: throw DomainError("zero_c is a D7 endpoint");
  }
  return assemble(pieces, spec.sign, nmax);
}

VorosSeries voros_closed_form(const EndpointSpec& spec, const D7Parameters& p, int nmax) {
  if (spec.equation != Equation::D7) throw DomainError("D7 parameter given for a D6 endpoint");
  if (p.c == cplx(0)) throw DegenerateError("D7 requires c != 0");
  if (spec.target == Target::ZeroC) return assemble({{false, -3, p.c}}, spec.sign, nmax);
  return assemble({}, spec.sign, nmax);
}

// ---------------------------------------------------------------- difference equations

namespace {

enum class Var { CP, CM, CInf, C0 };

// coef * (alpha z + a) * log(1 + s/z) in the variable z = var * eta, or a constant when alpha = a = 0.
struct RhsTerm {
  Var var;
  Rational coef, alpha, a, s;
};

struct DiffEq {
  Rational constant;
  std::vector<RhsTerm> terms;
};

Laurent rhs_laurent(const RhsTerm& r, int floor) {
  Laurent lin(floor - 1);
  lin.set(1, r.alpha);
  lin.set(0, r.a);
  return (lin * laurent_log1p(r.s, floor - 1)).truncated(floor) * r.coef;
}

// 1 - (z+1) log(1+1/z) + log(1+1/(2z)), scaled
std::vector<RhsTerm> f_increment(Var v, Rational scale) {
  return {{v, -scale, 1, 1, 1}, {v, scale, 0, 1, Rational(1, 2)}};
}

// Right-hand sides of the Voros difference equations for the + sign, transcribed per variable.
std::optional<DiffEq> voros_rhs(Target t, int shift) {
  DiffEq d;
  auto add = [&](std::vector<RhsTerm> v) { d.terms.insert(d.terms.end(), v.begin(), v.end()); };
  switch (t) {
    case Target::Inf1:
    case Target::Inf2:
      if (shift == 1) {
        d.constant = 1;
        add(f_increment(Var::CP, 1));
      }
      return d;
    case Target::Inf3:
    case Target::Inf4:
      if (shift == 2) {
        d.constant = 1;
        add(f_increment(Var::CM, 1));
      }
      return d;
    case Target::ZeroCInf:
      d.constant = -2;
      add(f_increment(shift == 1 ? Var::CP : Var::CM, 1));
      add({{Var::CInf, 3, 1, Rational(1, 2), 1}});
      return d;
    case Target::ZeroC0:
      if (shift == 1) {
        d.constant = -2;
        add(f_increment(Var::CP, 1));
        add({{Var::C0, 3, 1, Rational(1, 2), 1}});
      } else {
        d.constant = 2;
        add(f_increment(Var::CM, -1));
        add({{Var::C0, 3, 1, Rational(-1, 2), -1}});
      }
      return d;
    case Target::ZeroC: return std::nullopt;
  }
  return std::nullopt;
}

// Closed form for the + sign as (F or G, weight, variable).
struct ClosedTerm {
  bool f_kind;
  Rational weight;
  Var var;
};

std::vector<ClosedTerm> closed_terms(Target t) {
  switch (t) {
    case Target::Inf1:
    case Target::Inf2: return {{true, 1, Var::CP}};
    case Target::Inf3:
    case Target::Inf4: return {{true, 1, Var::CM}};
    case Target::ZeroCInf: return {{true, 1, Var::CP}, {true, 1, Var::CM}, {false, -3, Var::CInf}};
    case Target::ZeroC0: return {{true, 1, Var::CP}, {true, -1, Var::CM}, {false, -3, Var::C0}};
    default: return {};
  }
}

// Shift of each variable, in units of 1/eta, under T_1 or T_2.
int var_shift(Var v, int shift) {
  switch (v) {
    case Var::CP: return shift == 1 ? 1 : 0;
    case Var::CM: return shift == 1 ? 0 : 1;
    case Var::CInf: return 1;
    case Var::C0: return shift == 1 ? 1 : -1;
  }
  return 0;
}

DifferenceReport compare(const std::string& name, const Laurent& lhs, const Laurent& rhs, int floor) {
  DifferenceReport r;
  r.name = name;
  r.checked_through = floor;
  int k = first_mismatch(lhs, rhs, floor);
  r.ok = k == INT_MIN;
  if (!r.ok) {
    r.first_mismatch = k;
    std::ostringstream os;
    os << "z^" << k << ": " << lhs.coeff(k) << " vs " << rhs.coeff(k);
    r.detail = os.str();
  }
  return r;
}

DifferenceReport check_w_variant(const std::string& name, Target t, int shift, int nmax) {
  const int floor = -2 * nmax;
  auto rhs = voros_rhs(t, shift);
  if (!rhs) throw DomainError("no difference equation for " + name);
  const Laurent f = f_series(nmax), g = g_series(nmax);
  std::map<Var, Laurent> lhs_by_var, rhs_by_var;
  for (Var v : {Var::CP, Var::CM, Var::CInf, Var::C0}) {
    lhs_by_var.emplace(v, Laurent(floor));
    rhs_by_var.emplace(v, Laurent(floor));
  }
  for (const auto& ct : closed_terms(t)) {
    const Laurent& s = ct.f_kind ? f : g;
    lhs_by_var.at(ct.var) += (s.shifted(var_shift(ct.var, shift)) - s) * ct.weight;
  }
  Rational lhs_const = 0, rhs_const = rhs->constant;
  for (const auto& term : rhs->terms) rhs_by_var.at(term.var) += rhs_laurent(term, floor);
  for (auto& [v, l] : lhs_by_var) {
    lhs_const += l.coeff(0);
    l.set(0, 0);
  }
  for (auto& [v, l] : rhs_by_var) {
    rhs_const += l.coeff(0);
    l.set(0, 0);
  }
  for (Var v : {Var::CP, Var::CM, Var::CInf, Var::C0}) {
    auto rep = compare(name, lhs_by_var.at(v), rhs_by_var.at(v), floor);
    if (!rep.ok) return rep;
  }
  DifferenceReport rep;
  rep.name = name;
  rep.checked_through = floor;
  rep.ok = lhs_const == rhs_const;
  if (!rep.ok) {
    std::ostringstream os;
    os << "constant term: " << lhs_const << " vs " << rhs_const;
    rep.detail = os.str();
  }
  return rep;
}

Laurent f_rhs(int floor) {
  return laurent_constant(1, floor) - (laurent_linear(1, floor - 1) * laurent_log1p(1, floor - 1)).truncated(floor) +
         laurent_log1p(Rational(1, 2), floor);
}

Laurent g_rhs(int floor) {
  return laurent_constant(1, floor) -
         (laurent_linear(Rational(1, 2), floor - 1) * laurent_log1p(1, floor - 1)).truncated(floor);
}

}  // namespace

std::vector<Rational> solve_difference_equation(const Laurent& rhs, int nmax) {
  const int top = 2 * nmax - 1;
  if (rhs.floor() > -(top + 1)) throw OrderError("right-hand side not known far enough");
  std::vector<Rational> a(top + 1, Rational(0));
  // The z^{-(m+1)} coefficient of S(z+1) - S(z) is sum_{l<=m} a_l C(-l, m+1-l).
  for (int m = 1; m <= top; ++m) {
    Rational acc = rhs.coeff(-(m + 1));
    for (int l = 1; l < m; ++l) acc -= a[l] * binomial(-l, m + 1 - l);
    a[m] = acc / binomial(-m, 1);
  }
  a.erase(a.begin());
  return a;
}

std::vector<std::string> difference_equation_kinds() {
  std::vector<std::string> k{"F", "G", "F-unique", "G-unique"};
  for (const char* t : {"inf1", "inf2", "inf3", "inf4", "zero_cinf", "zero_c0"})
    for (const char* s : {"T1", "T2"}) k.push_back(std::string("W:") + t + ":" + s);
  return k;
}

DifferenceReport verify_difference_equation(const std::string& kind, int nmax) {
  if (nmax < 2) throw DomainError("difference equations need nmax >= 2");
  const int floor = -2 * nmax;
  if (kind == "F" || kind == "G") {
    const Laurent s = kind == "F" ? f_series(nmax) : g_series(nmax);
    const Laurent lhs = s.shifted(1) - s;
    return compare(kind, lhs, kind == "F" ? f_rhs(floor) : g_rhs(floor), floor);
  }
  if (kind == "F-unique" || kind == "G-unique") {
    const bool f = kind == "F-unique";
    auto a = solve_difference_equation(f ? f_rhs(floor) : g_rhs(floor), nmax);
    Laurent rebuilt(floor);
    for (size_t l = 0; l < a.size(); ++l) rebuilt.set(-static_cast<int>(l + 1), a[l]);
    return compare(kind, rebuilt, f ? f_series(nmax) : g_series(nmax), floor + 1);
  }
  if (kind.rfind("W:", 0) == 0) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, kind, boost::algorithm::is_any_of(":"));
    if (parts.size() == 3 && (parts[2] == "T1" || parts[2] == "T2")) {
      auto it = target_names().find(parts[1]);
      if (it != target_names().end() && it->second != Target::ZeroC)
        return check_w_variant(kind, it->second, parts[2] == "T1" ? 1 : 2, nmax);
    }
  }
  throw DomainError("unknown difference-equation kind '" + kind + "'");
}

// ---------------------------------------------------------------- numeric oracle

namespace {

// The u-plane description of one endpoint problem.
struct Problem {
  SeriesModel model;
  std::function<cplx(cplx)> t_of_u, lambda0_of_u, dt_du, q;
  std::vector<cplx> turning;        // zeros of q
  std::vector<cplx> special;        // all finite special points, turning points included
  std::optional<cplx> target;       // nullopt: u = infinity
  std::function<cplx(cplx)> r_ref;  // expected R_{-1} for the + sign near the target
};

double seg_point_distance(cplx a, cplx b, cplx p) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  double s = len2 > 0 ? std::real(std::conj(d) * (p - a)) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(a + s * d - p);
}

struct Plan {
  std::vector<cplx> nodes;  // u_tau, waypoints..., target or far point
  bool to_infinity = false;
  double length = 0;
};

std::optional<Plan> plan_path(const Problem& pr, cplx tau, double rho_tau) {
  const auto& sp = pr.special;
  std::vector<double> clear(sp.size());
  for (size_t i = 0; i < sp.size(); ++i) {
    double d = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < sp.size(); ++j)
      if (j != i) d = std::min(d, std::abs(sp[i] - sp[j]));
    clear[i] = std::abs(sp[i] - tau) < 1e-14 ? rho_tau : 0.3 * d;
  }
  auto is_target = [&](size_t i) { return pr.target && std::abs(sp[i] - *pr.target) < 1e-14; };
  auto is_tau = [&](size_t i) { return std::abs(sp[i] - tau) < 1e-14; };

  std::vector<cplx> nodes{tau};
  std::vector<int> kind{0};  // 0 start, 1 waypoint, 2 goal
  double rbig = 1.0;
  for (cplx s : sp) rbig = std::max(rbig, std::abs(s));
  rbig *= 3;
  auto point_ok = [&](cplx p) {
    for (size_t i = 0; i < sp.size(); ++i)
      if (std::abs(p - sp[i]) < clear[i]) return false;
    return true;
  };
  for (size_t i = 0; i < sp.size(); ++i) {
    if (is_target(i)) continue;
    for (int k = 0; k < 8; ++k) {
      cplx w = sp[i] + 1.6 * clear[i] * std::polar(1.0, (k + 0.5) * M_PI / 4);
      if (point_ok(w)) {
        nodes.push_back(w);
        kind.push_back(1);
      }
    }
  }
  if (pr.target) {
    nodes.push_back(*pr.target);
    kind.push_back(2);
  } else {
    for (int k = 0; k < 16; ++k) {
      nodes.push_back(std::polar(rbig, k * M_PI / 8));
      kind.push_back(2);
    }
  }
  auto edge_ok = [&](size_t a, size_t b) {
    for (size_t i = 0; i < sp.size(); ++i) {
      if (is_tau(i) && (kind[a] == 0 || kind[b] == 0)) {
        // the loop start lies on this edge, so it must leave the loop disk
        if (std::abs(nodes[kind[a] == 0 ? b : a] - tau) < 1.05 * rho_tau) return false;
        continue;
      }
      if (is_target(i) && (kind[a] == 2 || kind[b] == 2)) continue;
      if (seg_point_distance(nodes[a], nodes[b], sp[i]) < clear[i]) return false;
    }
    return true;
  };
  const size_t n = nodes.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> prev(n, -1);
  std::vector<bool> done(n, false);
  dist[0] = 0;
  for (size_t it = 0; it < n; ++it) {
    int u = -1;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && (u < 0 || dist[i] < dist[u])) u = static_cast<int>(i);
    if (u < 0 || !std::isfinite(dist[u])) break;
    done[u] = true;
    if (kind[u] == 2) {
      Plan plan;
      plan.to_infinity = !pr.target;
      plan.length = dist[u];
      for (int v = u; v >= 0; v = prev[v]) plan.nodes.push_back(nodes[v]);
      std::reverse(plan.nodes.begin(), plan.nodes.end());
      return plan;
    }
    for (size_t v = 0; v < n; ++v) {
      if (done[v] || kind[v] == 0 || !edge_ok(u, v)) continue;
      double nd = dist[u] + std::abs(nodes[v] - nodes[u]);
      if (nd < dist[v]) {
        dist[v] = nd;
        prev[v] = u;
      }
    }
  }
  return std::nullopt;
}

// A path piece u(s), s in [0, 1], with the branch of sqrt(q) sampled along it.
struct PathPiece {
  std::function<cplx(double)> u, du;
  std::vector<double> s;
  std::vector<cplx> y;

  cplx branch(double si, cplx q) const {
    auto it = std::lower_bound(s.begin(), s.end(), si);
    size_t k = static_cast<size_t>(it - s.begin());
    if (k == s.size()) k = s.size() - 1;
    if (k > 0 && si - s[k - 1] < s[k] - si) --k;
    cplx r = std::sqrt(q);
    return std::abs(r - y[k]) <= std::abs(r + y[k]) ? r : -r;
  }
};

std::vector<double> sample_grid(bool dense_end) {
  std::vector<double> s;
  for (int i = 0; i <= 600; ++i) s.push_back(i / 600.0);
  if (dense_end) {
    s.back() = 1 - 1e-3 / 600;
    for (int j = 12; j <= 45; ++j) s.push_back(1 - std::ldexp(1.0, -j));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Continue the branch y ~ sqrt(q) backwards along the piece from y_end at its last sample.
void track_backward(const Problem& pr, PathPiece& pc, cplx y_end) {
  pc.y.assign(pc.s.size(), 0.0);
  cplx prev = y_end;
  for (size_t k = pc.s.size(); k-- > 0;) {
    cplx r = std::sqrt(pr.q(pc.u(pc.s[k])));
    prev = std::abs(r - prev) <= std::abs(r + prev) ? r : -r;
    pc.y[k] = prev;
  }
}

void track_forward(const Problem& pr, PathPiece& pc, cplx y_start) {
  pc.y.assign(pc.s.size(), 0.0);
  cplx prev = y_start;
  for (size_t k = 0; k < pc.s.size(); ++k) {
    cplx r = std::sqrt(pr.q(pc.u(pc.s[k])));
    prev = std::abs(r - prev) <= std::abs(r + prev) ? r : -r;
    pc.y[k] = prev;
  }
}

cplx integrand(const Problem& pr, cplx u, cplx y, int n, int& evals) {
  ++evals;
  const cplx dtdu = pr.dt_du(u);
  const cplx t = pr.t_of_u(u);
  auto zp = zero_param_solution(pr.model, t, pr.lambda0_of_u(u), 2 * n, 2 * n + 3);
  EtaSeries R = riccati_solution(zp, y / dtdu);
  return R.coeff(1 - 2 * n).value() * dtdu;
}

cplx integrate_piece(const Problem& pr, const PathPiece& pc, int n, double tol, int& evals) {
  auto g = [&](double s) {
    const cplx u = pc.u(s);
    return integrand(pr, u, pc.branch(s, pr.q(u)), n, evals) * pc.du(s);
  };
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, 0.0, 1.0, 12, tol, &err);
}

OracleResult run_oracle(const Problem& pr, int sign, int n, const OracleOptions& opt) {
  if (n < 1 || n > 3) throw DomainError("oracle order n must be 1..3");
  std::vector<size_t> taus;
  if (opt.tau_index >= 0) {
    if (opt.tau_index >= static_cast<int>(pr.turning.size())) throw DomainError("turning point index out of range");
    taus.push_back(static_cast<size_t>(opt.tau_index));
  } else {
    for (size_t i = 0; i < pr.turning.size(); ++i) taus.push_back(i);
  }
  // Pick the turning point whose loop integrand is smallest: leg and half loop cancel to
  // the answer, so this bounds the cancellation.
  std::optional<Plan> best;
  double best_rho = 0, best_score = std::numeric_limits<double>::infinity();
  int probe_evals = 0;
  for (size_t i : taus) {
    const cplx tau = pr.turning[i];
    double d = std::numeric_limits<double>::infinity();
    for (cplx s : pr.special)
      if (std::abs(s - tau) > 1e-14) d = std::min(d, std::abs(s - tau));
    const double rho = opt.loop_fraction * d;
    auto plan = plan_path(pr, tau, rho);
    if (!plan) continue;
    double score = 0;
    for (int k = 0; k < 4; ++k) {
      const cplx u = tau + std::polar(rho, 0.3 + k * M_PI / 2);
      try {
        score = std::max(score, rho * std::abs(integrand(pr, u, std::sqrt(pr.q(u)), n, probe_evals)));
      } catch (const Error&) {
        score = std::numeric_limits<double>::max();
      }
    }
    if (!best || score < best_score) {
      best = plan;
      best_rho = rho;
      best_score = score;
    }
  }
  if (!best) throw TraceError("no admissible path from a turning point to the endpoint");

  const cplx tau = best->nodes[0];
  const cplx first = best->nodes[1];
  const cplx P = tau + best_rho * (first - tau) / std::abs(first - tau);
  std::vector<cplx> poly{P};
  poly.insert(poly.end(), best->nodes.begin() + 1, best->nodes.end());

  std::vector<PathPiece> leg;
  for (size_t k = 0; k + 1 < poly.size(); ++k) {
    const cplx a = poly[k], b = poly[k + 1];
    const bool last = k + 2 == poly.size();
    PathPiece pc;
    pc.u = [a, b](double s) { return a + s * (b - a); };
    pc.du = [a, b](double) { return b - a; };
    pc.s = sample_grid(last && !best->to_infinity);
    leg.push_back(std::move(pc));
  }
  if (best->to_infinity) {
    const cplx F = poly.back();
    PathPiece pc;
    pc.u = [F](double s) { return F / (1 - s); };
    pc.du = [F](double s) { return F / ((1 - s) * (1 - s)); };
    pc.s = sample_grid(true);
    leg.push_back(std::move(pc));
  }

  // Fix the sign at the endpoint from the reference behaviour of R_{-1}.
  PathPiece& tail = leg.back();
  const cplx u_end = tail.u(tail.s.back());
  const cplx y0 = std::sqrt(pr.q(u_end));
  const cplx ratio = y0 / pr.dt_du(u_end) / (double(sign) * pr.r_ref(u_end));
  if (std::abs(std::abs(ratio) - 1) > 0.2) throw TraceError("endpoint reference does not match R_{-1}");
  cplx y_end = std::real(ratio) > 0 ? y0 : -y0;
  for (size_t k = leg.size(); k-- > 0;) {
    track_backward(pr, leg[k], y_end);
    y_end = leg[k].y.front();
  }
  const cplx y_P = y_end;

  PathPiece loop;
  const double th0 = std::arg(P - tau);
  loop.u = [tau, rho = best_rho, th0](double s) { return tau + std::polar(rho, th0 + 2 * M_PI * s); };
  loop.du = [rho = best_rho, th0](double s) {
    return 2 * M_PI * I * std::polar(rho, th0 + 2 * M_PI * s);
  };
  loop.s = sample_grid(false);
  track_forward(pr, loop, -y_P);
  if (std::abs(loop.y.back() - y_P) > 1e-8 * std::abs(y_P))
    throw TraceError("loop around the turning point did not exchange the sheets");

  OracleResult res;
  // The integrand must stay bounded at the endpoint; growth signals a wrong branch or chart.
  {
    auto g = [&](double s) {
      const cplx u = tail.u(s);
      return integrand(pr, u, tail.branch(s, pr.q(u)), n, res.evaluations) * tail.du(s);
    };
    const double a = std::abs(g(1 - 1e-4)), b = std::abs(g(1 - 1e-8));
    if (!(b <= 1e3 * std::max(a, 1e-300) + 1e-200)) throw Error("Voros integrand diverges at the endpoint");
  }
  for (const auto& pc : leg) res.leg += integrate_piece(pr, pc, n, opt.tol, res.evaluations);
  res.loop = integrate_piece(pr, loop, n, opt.tol, res.evaluations);
  res.value = res.leg + 0.5 * res.loop;
  res.path_u = poly;
  return res;
}

}  // namespace

OracleResult voros_numeric_oracle(const EndpointSpec& spec, const Parameters& p, int n, const OracleOptions& opt) {
  if (spec.equation != Equation::D6) throw DomainError("D6 parameters given for a D7 endpoint");
  if (auto why = p.genericity_violation(); !why.empty()) throw DegenerateError("non-generic parameters: " + why);
  const UChart chart{p};
  Problem pr;
  pr.model = SeriesModel::d6(p);
  pr.t_of_u = [chart](cplx u) { return chart.t_of_u(u); };
  pr.lambda0_of_u = [chart](cplx u) { return chart.lambda0_of_u(u); };
  pr.dt_du = [chart](cplx u) { return chart.dt_du(u); };
  pr.q = [chart](cplx u) { return chart.q(u); };
  for (cplx u : chart.turning_points_u()) pr.turning.push_back(u);
  pr.special = pr.turning;
  for (cplx u : {cplx(-1.0), cplx(0.0), chart.double_pole_cinf(), chart.double_pole_c0()}) pr.special.push_back(u);
  switch (spec.target) {
    case Target::Inf1:
    case Target::Inf2: pr.target = std::nullopt; break;
    case Target::Inf3:
    case Target::Inf4: pr.target = cplx(0.0); break;
    case Target::ZeroCInf: pr.target = chart.double_pole_cinf(); break;
    case Target::ZeroC0: pr.target = chart.double_pole_c0(); break;
    case Target::ZeroC: throw DomainError("zero_c is a D7 endpoint");
  }
  if (is_infinity(spec.target))
    pr.r_ref = [chart](cplx u) { return 2.0 * chart.lambda0_of_u(u) / chart.t_of_u(u); };
  else {
    const cplx c = spec.target == Target::ZeroCInf ? p.c_inf : p.c_0;
    pr.r_ref = [chart, c](cplx u) { return c / chart.t_of_u(u); };
  }
  auto r = run_oracle(pr, spec.sign, n, opt);
  return r;
}

OracleResult voros_numeric_oracle(const EndpointSpec& spec, const D7Parameters& p, int n, const OracleOptions& opt) {
  if (spec.equation != Equation::D7) throw DomainError("D7 parameter given for a D6 endpoint");
  if (p.c == cplx(0)) throw DegenerateError("D7 requires c != 0");
  const D7UChart chart{p.c};
  Problem pr;
  pr.model = SeriesModel::d7(p.c);
  pr.t_of_u = [chart](cplx u) { return chart.t_of_u(u); };
  pr.lambda0_of_u = [chart](cplx u) { return chart.lambda0_of_u(u); };
  pr.dt_du = [chart](cplx u) { return chart.dt_du(u); };
  pr.q = [chart](cplx u) { return chart.q(u); };
  pr.turning = {chart.turning_point_u()};
  pr.special = {chart.turning_point_u(), cplx(0.0), p.c};
  if (spec.target == Target::ZeroC) {
    pr.target = p.c;
    pr.r_ref = [chart, c = p.c](cplx u) { return c / chart.t_of_u(u); };
  } else {
    // Near infinity Delta ~ 3/lambda0^2.
    pr.target = std::nullopt;
    pr.r_ref = [chart](cplx u) { return std::sqrt(3.0) / chart.lambda0_of_u(u); };
  }
  return run_oracle(pr, spec.sign, n, opt);
}

}  // namespace p3wkb
