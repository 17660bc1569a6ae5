#include "p3wkb/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "json.hpp"
#include "p3wkb/errors.hpp"

namespace p3wkb {

namespace {

using json = nlohmann::json;

double min_pairwise(const std::vector<cplx>& pts) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) d = std::min(d, std::abs(pts[i] - pts[j]));
  return d;
}

cplx nearest_root(cplx q, cplx ref) {
  const cplx r = std::sqrt(q);
  return std::abs(r - ref) <= std::abs(r + ref) ? r : -r;
}

}  // namespace

QuadDiff QuadDiff::d6(const Parameters& p) {
  if (auto why = p.genericity_violation(); !why.empty()) throw DegenerateError("non-generic parameters: " + why);
  QuadDiff qd;
  qd.equation = Equation::D6;
  qd.p = p;
  const UChart chart{p};
  qd.q = [chart](cplx u) { return chart.q(u); };
  for (cplx u : chart.turning_points_u()) qd.turning.push_back(u);
  qd.simple_pole = -1.0;
  qd.poles = {{"double_pole:c_inf", chart.double_pole_cinf(), 2, p.c_inf},
              {"double_pole:c_0", chart.double_pole_c0(), 2, p.c_0},
              {"pole:u=0", 0.0, 4, p.c_m()}};
  qd.length_scale = min_pairwise(qd.special_points());
  return qd;
}

QuadDiff QuadDiff::d7(const D7Parameters& p) {
  if (p.c == cplx(0)) throw DegenerateError("D7 requires c != 0");
  QuadDiff qd;
  qd.equation = Equation::D7;
  qd.c7 = p.c;
  const D7UChart chart{p.c};
  qd.q = [chart](cplx u) { return chart.q(u); };
  qd.turning = {chart.turning_point_u()};
  qd.simple_pole = 0.0;
  qd.poles = {{"double_pole:c", p.c, 2, p.c}};
  qd.length_scale = min_pairwise(qd.special_points());
  return qd;
}

std::vector<cplx> QuadDiff::special_points() const {
  std::vector<cplx> s = turning;
  s.push_back(simple_pole);
  for (const auto& pl : poles) s.push_back(pl.u);
  return s;
}

// ---------------------------------------------------------------- directions

namespace {

// q ~ C (u - origin)^k near the origin. The four-point average leaves an O(h^4) error,
// removed by one Richardson step.
cplx local_coefficient(const QuadDiff& qd, cplx origin, int k) {
  const double h = 1e-4 * qd.length_scale;
  auto est = [&](double d) {
    cplx acc = 0.0;
    for (int j = 0; j < 4; ++j) {
      const cplx z = std::polar(d, 0.4 + j * M_PI / 2);
      acc += qd.q(origin + z) / std::pow(z, k);
    }
    return acc / 4.0;
  };
  return (16.0 * est(h / 2) - est(h)) / 15.0;
}

bool is_turning(const QuadDiff& qd, cplx origin, int* index = nullptr) {
  for (size_t i = 0; i < qd.turning.size(); ++i)
    if (std::abs(qd.turning[i] - origin) <= 1e-12 * std::max(1.0, std::abs(origin))) {
      if (index) *index = static_cast<int>(i);
      return true;
    }
  return false;
}

}  // namespace

std::vector<cplx> emanation_directions(const QuadDiff& qd, cplx origin) {
  std::vector<cplx> out;
  if (is_turning(qd, origin)) {
    // Im (2/5) sqrt(C) z^{5/2} = 0
    const double a = std::arg(std::sqrt(local_coefficient(qd, origin, 3)));
    for (int k = 0; k < 5; ++k) out.push_back(std::polar(1.0, (k * M_PI - a) * 2.0 / 5.0));
    return out;
  }
  if (std::abs(origin - qd.simple_pole) <= 1e-12 * std::max(1.0, std::abs(origin))) {
    // Im 2 sqrt(C) z^{1/2} = 0
    const double a = std::arg(std::sqrt(local_coefficient(qd, origin, -1)));
    out.push_back(std::polar(1.0, -2.0 * a));
    return out;
  }
  throw DomainError("emanation_directions: origin is neither a turning point nor the simple pole");
}

// ---------------------------------------------------------------- tracing

namespace {

// Grid hash of visited points for closure detection.
struct PointIndex {
  double cell;
  std::unordered_map<long long, std::vector<size_t>> grid;

  long long key(long long i, long long j) const { return i * 1000003LL + j; }
  std::pair<long long, long long> cell_of(cplx u) const {
    return {static_cast<long long>(std::floor(u.real() / cell)), static_cast<long long>(std::floor(u.imag() / cell))};
  }
  void add(cplx u, size_t idx) {
    auto [i, j] = cell_of(u);
    grid[key(i, j)].push_back(idx);
  }
  template <class F>
  void near(cplx u, F&& f) const {
    auto [i, j] = cell_of(u);
    for (long long a = i - 1; a <= i + 1; ++a)
      for (long long b = j - 1; b <= j + 1; ++b) {
        auto it = grid.find(key(a, b));
        if (it == grid.end()) continue;
        for (size_t idx : it->second) f(idx);
      }
  }
};

// Integral of sqrt(q) du along the straight segment a -> b, branch continued from y_a.
cplx segment_integral(const QuadDiff& qd, cplx a, cplx b, cplx y_a, cplx* y_b = nullptr) {
  const int m = 16;
  cplx y = y_a, total = 0.0;
  for (int k = 0; k < m; ++k) {
    const cplx u0 = a + (b - a) * (double(k) / m), u1 = a + (b - a) * (double(k + 1) / m);
    const cplx ym = nearest_root(qd.q(0.5 * (u0 + u1)), y);
    const cplx y1 = nearest_root(qd.q(u1), ym);
    total += (u1 - u0) / 6.0 * (y + 4.0 * ym + y1);
    y = y1;
  }
  if (y_b) *y_b = y;
  return total;
}

// Integral from the origin to u0 along the straight ray, with u - origin = (u0 - origin) s^2.
cplx start_integral(const QuadDiff& qd, cplx origin, cplx u0, cplx y0) {
  const cplx d = u0 - origin;
  auto f = [&](double s) {
    if (s <= 0) return cplx(0.0);
    const cplx y = std::sqrt(qd.q(origin + d * (s * s)));
    // the phase along the ray is nearly constant, so pick the root aligned with y0
    const cplx yy = std::real(y * std::conj(y0)) >= 0 ? y : -y;
    return yy * d * (2.0 * s);
  };
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 8, 1e-12, &err);
}

}  // namespace

StokesCurve trace_curve(const QuadDiff& qd, int origin_index, int ray, const TraceOptions& opt) {
  using state = std::array<double, 3>;  // Re u, Im u, Im w
  namespace ode = boost::numeric::odeint;

  const bool from_pole = origin_index < 0;
  if (!from_pole && origin_index >= static_cast<int>(qd.turning.size()))
    throw DomainError("trace_curve: turning point index out of range");
  const cplx origin = from_pole ? qd.simple_pole : qd.turning[origin_index];
  const auto dirs = emanation_directions(qd, origin);
  if (ray < 0 || ray >= static_cast<int>(dirs.size())) throw DomainError("trace_curve: ray index out of range");

  const double ell = qd.length_scale;
  const double rcap = opt.r_cap * ell;
  double big = 1;
  for (cplx s : qd.special_points()) big = std::max(big, std::abs(s));
  const double r_esc = opt.escape_factor * big;
  const double budget = opt.arc_factor * r_esc;
  const auto specials = qd.special_points();

  StokesCurve cv;
  cv.origin = from_pole ? "simple_pole" : "tau" + std::to_string(origin_index);
  cv.origin_index = origin_index;
  cv.ray = ray;

  const cplx dir = dirs[ray];
  cplx u0 = origin + 1e-3 * ell * dir;
  cplx y = std::sqrt(qd.q(u0));
  if (std::real(std::conj(y) * std::conj(dir)) < 0) y = -y;  // conj(y) must point along dir
  cplx w0 = start_integral(qd, origin, u0, y);
  // The curve bends away from the straight ray; Newton steps restore Im w = 0 at the start.
  for (int it = 0; it < 4 && std::abs(w0.imag()) > 1e-14 * std::abs(w0); ++it) {
    u0 += -I * w0.imag() / y;
    y = nearest_root(qd.q(u0), y);
    w0 = start_integral(qd, origin, u0, y);
  }

  cv.points = {origin, u0};
  cv.w = {0.0, w0};
  double im_defect = std::abs(w0.imag());

  auto nearest_special = [&](cplx u) {
    double d = std::numeric_limits<double>::infinity();
    for (cplx s : specials) d = std::min(d, std::abs(u - s));
    return d;
  };

  // Im w relaxes on the length scale of the local geometry, which keeps the feedback non-stiff.
  cplx y_ref = y;
  auto rhs = [&](const state& x, state& dx, double) {
    const cplx u{x[0], x[1]};
    const cplx yy = nearest_root(qd.q(u), y_ref);
    const double ay = std::abs(yy);
    const double gain = 2.0 / std::max(nearest_special(u), 1e-3 * ell);
    double sphi = ay > 0 ? gain * x[2] / ay : 0.0;
    sphi = std::clamp(sphi, -0.3, 0.3);
    const cplx v = std::conj(yy) / ay * cplx(std::sqrt(1 - sphi * sphi), -sphi);
    dx[0] = v.real();
    dx[1] = v.imag();
    dx[2] = std::imag(yy * v);
  };

  auto stepper = ode::make_controlled(opt.rtol * ell, opt.rtol, ode::runge_kutta_dopri5<state>());
  state x{u0.real(), u0.imag(), w0.imag()};
  double s = 0, ds = 1e-3 * ell;
  double max_from_origin = std::abs(u0 - origin);
  PointIndex index{rcap, {}};
  std::vector<cplx> heading{dir, dir};
  index.add(u0, 1);

  while (true) {
    const cplx u_prev{x[0], x[1]};
    const double hmax = std::max(0.05 * nearest_special(u_prev), 1e-3 * rcap);
    ds = std::min(ds, hmax);
    state trial = x;
    double s_trial = s;
    if (stepper.try_step(rhs, trial, s_trial, ds) == ode::fail) {
      if (ds < 1e-12 * ell) {
        cv.terminus = "trace_error";
        break;
      }
      continue;
    }
    const cplx u{trial[0], trial[1]};
    cplx y_new;
    const cplx seg = segment_integral(qd, u_prev, u, y_ref, &y_new);
    x = trial;
    s = s_trial;
    y_ref = y_new;
    const cplx w = cv.w.back() + seg;
    cv.points.push_back(u);
    cv.w.push_back(w);
    im_defect = std::max(im_defect, std::abs(w.imag()));
    cv.arc_length = s;
    heading.push_back((u - u_prev) / std::max(std::abs(u - u_prev), 1e-300));
    max_from_origin = std::max(max_from_origin, std::abs(u - origin));

    if (std::abs(u) > r_esc) {
      cv.terminus = "escaped";
      break;
    }
    std::string hit;
    for (const auto& pl : qd.poles)
      if (std::abs(u - pl.u) < rcap) hit = pl.label;
    for (size_t j = 0; j < qd.turning.size() && hit.empty(); ++j) {
      const bool self = static_cast<int>(j) == origin_index;
      if (std::abs(u - qd.turning[j]) < rcap && (!self || max_from_origin > 0.5 * ell))
        hit = "turning_point:" + std::to_string(j);
    }
    if (hit.empty() && std::abs(u - qd.simple_pole) < rcap && (!from_pole || max_from_origin > 0.5 * ell))
      hit = "simple_pole";
    if (!hit.empty()) {
      cv.terminus = hit;
      break;
    }
    const size_t me = cv.points.size() - 1;
    bool closed = false;
    index.near(u, [&](size_t k) {
      if (closed || k + 20 > me || s < 50 * rcap) return;
      if (std::abs(cv.points[k] - u) < rcap && std::real(heading[k] * std::conj(heading[me])) > 0.99) closed = true;
    });
    if (closed) {
      cv.terminus = "closed_loop";
      break;
    }
    index.add(u, me);
    if (s > budget) {
      cv.terminus = "arc_budget";
      break;
    }
  }
  cv.im_defect = im_defect;
  return cv;
}

// ---------------------------------------------------------------- degenerations

namespace {

// Winding number of the closed polygon around z.
int winding(const std::vector<cplx>& poly, cplx z) {
  double total = 0;
  for (size_t k = 0; k < poly.size(); ++k) {
    const cplx a = poly[k] - z, b = poly[(k + 1) % poly.size()] - z;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2 * M_PI)));
}

int parse_turning_terminus(const std::string& t) {
  const std::string pre = "turning_point:";
  if (t.rfind(pre, 0) != 0) return -1;
  return std::stoi(t.substr(pre.size()));
}

}  // namespace

std::vector<DegenerationRecord> detect_degenerations(const StokesDiagram& d, const QuadDiff& qd,
                                                     const TraceOptions& opt) {
  std::vector<DegenerationRecord> out;
  const size_t nt = qd.turning.size();

  // Connections between distinct turning points, with the Im of the connecting integral.
  std::vector<std::vector<double>> conn(nt, std::vector<double>(nt, std::numeric_limits<double>::infinity()));
  for (const auto& cv : d.curves) {
    if (cv.origin_index < 0) continue;
    const int j = parse_turning_terminus(cv.terminus);
    if (j < 0 || j == cv.origin_index || cv.points.size() < 2) continue;
    // finish the path into the turning point
    cplx y_end = std::sqrt(qd.q(cv.points.back()));
    const cplx w_prev = cv.w.back() - cv.w[cv.w.size() - 2];
    const cplx seg_dir = cv.points.back() - cv.points[cv.points.size() - 2];
    if (std::real(y_end * seg_dir * std::conj(w_prev)) < 0) y_end = -y_end;
    const cplx w = cv.w.back() + segment_integral(qd, cv.points.back(), qd.turning[j], y_end);
    const double diag = std::abs(w.imag()) / std::max(std::abs(w), 1e-300);
    const int i = cv.origin_index;
    conn[i][j] = conn[j][i] = std::min(conn[i][j], diag);
  }
  if (nt == 3) {
    double worst = 0;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j) worst = std::max(worst, conn[i][j]);
    if (worst < opt.eps_deg) out.push_back({"triangle", {"tau0", "tau1", "tau2"}, worst});
  }

  // Loops: a curve returning to its own turning point around exactly one double pole.
  std::set<std::pair<int, std::string>> seen;
  for (const auto& cv : d.curves) {
    const bool back_home = parse_turning_terminus(cv.terminus) == cv.origin_index && cv.origin_index >= 0;
    if (!back_home && cv.terminus != "closed_loop") continue;
    std::vector<cplx> poly = cv.points;
    if (back_home) poly.push_back(qd.turning[cv.origin_index]);
    const QuadDiff::Pole* enclosed = nullptr;
    int count = 0;
    for (const auto& pl : qd.poles) {
      if (pl.order != 2) continue;
      if (std::abs(winding(poly, pl.u)) == 1) {
        enclosed = &pl;
        ++count;
      }
    }
    if (count != 1) continue;
    const double diag = std::abs(enclosed->residue.real()) / std::abs(enclosed->residue);
    if (diag >= opt.eps_deg) continue;
    if (!seen.insert({cv.origin_index, enclosed->label}).second) continue;
    out.push_back({"loop", {cv.origin, enclosed->label}, diag});
  }
  return out;
}

std::string StokesDiagram::summary() const {
  bool tri = false, loop = false;
  for (const auto& r : degenerations) {
    tri |= r.kind == "triangle";
    loop |= r.kind == "loop";
  }
  if (tri && loop) return "triangle-type, loop-type";
  if (tri) return "triangle-type";
  if (loop) return "loop-type";
  return "no degeneration";
}

StokesDiagram trace_diagram(const QuadDiff& qd, const TraceOptions& opt) {
  StokesDiagram d;
  d.equation = qd.equation;
  d.p = qd.p;
  d.c7 = qd.c7;
  d.turning_points_u = qd.turning;
  d.simple_pole_u = qd.simple_pole;
  for (const auto& pl : qd.poles)
    if (pl.order == 2) d.double_poles_u.push_back(pl.u);
  for (size_t i = 0; i < qd.turning.size(); ++i)
    for (int r = 0; r < 5; ++r) d.curves.push_back(trace_curve(qd, static_cast<int>(i), r, opt));
  d.curves.push_back(trace_curve(qd, -1, 0, opt));
  d.degenerations = detect_degenerations(d, qd, opt);
  return d;
}

// ---------------------------------------------------------------- phi

namespace {

std::array<cplx, 3> phi_parts(const BranchPoint& b, const Parameters& p) {
  if (b.t == cplx(0) || b.lambda0 == cplx(0)) throw SingularError("phi_primitive: t = 0 or lambda0 = 0");
  const cplx t = b.t, l = b.lambda0, r = r_minus1(b, p);
  const cplx a1 = 2.0 * l - p.c_inf + t * r, b1 = 2.0 * l - p.c_inf - t * r;
  const cplx a2 = 2.0 * t * t - p.c_0 * t * l + t * t * l * r, b2 = 2.0 * t * t - p.c_0 * t * l - t * t * l * r;
  if (a1 == cplx(0) || b1 == cplx(0) || a2 == cplx(0) || b2 == cplx(0))
    throw SingularError("phi_primitive: logarithm of zero");
  return {4.0 * t * r, std::log(a1 / b1), std::log(a2 / b2)};
}

}  // namespace

cplx phi_primitive(const BranchPoint& b, const Parameters& p) {
  auto [lin, l1, l2] = phi_parts(b, p);
  return lin - p.c_inf * l1 - p.c_0 * l2;
}

std::vector<cplx> phi_along(const std::vector<BranchPoint>& path, const Parameters& p) {
  std::vector<cplx> out;
  cplx prev1 = 0.0, prev2 = 0.0;
  for (size_t k = 0; k < path.size(); ++k) {
    auto [lin, l1, l2] = phi_parts(path[k], p);
    if (k > 0) {
      l1 += 2 * M_PI * I * std::round((prev1 - l1).imag() / (2 * M_PI));
      l2 += 2 * M_PI * I * std::round((prev2 - l2).imag() / (2 * M_PI));
    }
    prev1 = l1;
    prev2 = l2;
    out.push_back(lin - p.c_inf * l1 - p.c_0 * l2);
  }
  return out;
}

// ---------------------------------------------------------------- output

namespace {

json pair_of(cplx z) { return json::array({z.real(), z.imag()}); }
cplx from_pair(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

std::string render_json(const StokesDiagram& d) {
  json j;
  if (d.equation == Equation::D6)
    j["parameters"] = {{"c_inf", pair_of(d.p.c_inf)}, {"c_0", pair_of(d.p.c_0)}};
  else
    j["parameters"] = {{"equation", "d7"}, {"c", pair_of(d.c7)}};
  j["turning_points_u"] = json::array();
  for (cplx u : d.turning_points_u) j["turning_points_u"].push_back(pair_of(u));
  j["simple_pole_u"] = pair_of(d.simple_pole_u);
  j["double_poles_u"] = json::array();
  for (cplx u : d.double_poles_u) j["double_poles_u"].push_back(pair_of(u));
  j["curves"] = json::array();
  for (const auto& cv : d.curves) {
    json c{{"origin", cv.origin}, {"ray", cv.ray}, {"terminus", cv.terminus}};
    c["points"] = json::array();
    for (cplx u : cv.points) c["points"].push_back(pair_of(u));
    j["curves"].push_back(c);
  }
  j["degenerations"] = json::array();
  for (const auto& r : d.degenerations)
    j["degenerations"].push_back({{"kind", r.kind}, {"participants", r.participants}, {"diagnostic", r.diagnostic}});
  return j.dump();
}

StokesDiagram diagram_from_json(const std::string& text) {
  const json j = json::parse(text);
  StokesDiagram d;
  const auto& par = j.at("parameters");
  if (par.contains("c")) {
    d.equation = Equation::D7;
    d.c7 = from_pair(par.at("c"));
  } else {
    d.p = {from_pair(par.at("c_inf")), from_pair(par.at("c_0"))};
  }
  for (const auto& u : j.at("turning_points_u")) d.turning_points_u.push_back(from_pair(u));
  if (j.contains("simple_pole_u")) d.simple_pole_u = from_pair(j.at("simple_pole_u"));
  if (j.contains("double_poles_u"))
    for (const auto& u : j.at("double_poles_u")) d.double_poles_u.push_back(from_pair(u));
  for (const auto& c : j.at("curves")) {
    StokesCurve cv;
    cv.origin = c.at("origin").get<std::string>();
    cv.ray = c.at("ray").get<int>();
    cv.terminus = c.at("terminus").get<std::string>();
    cv.origin_index = cv.origin.rfind("tau", 0) == 0 ? std::stoi(cv.origin.substr(3)) : -1;
    for (const auto& u : c.at("points")) cv.points.push_back(from_pair(u));
    d.curves.push_back(std::move(cv));
  }
  for (const auto& r : j.at("degenerations"))
    d.degenerations.push_back({r.at("kind").get<std::string>(), r.at("participants").get<std::vector<std::string>>(),
                               r.at("diagnostic").get<double>()});
  return d;
}

std::string render_svg(const StokesDiagram& d) {
  const double size = 800;
  cplx centre = 0.0;
  for (cplx u : d.turning_points_u) centre += u;
  if (!d.turning_points_u.empty()) centre /= double(d.turning_points_u.size());
  // Frame the special points with a margin.
  double extent = 0;
  for (cplx u : d.turning_points_u) extent = std::max(extent, std::abs(u - centre));
  for (cplx u : d.double_poles_u) extent = std::max(extent, std::abs(u - centre));
  extent = std::max({extent, std::abs(d.simple_pole_u - centre), std::abs(centre), 1e-3});
  const double scale = size / (2 * 2.2 * extent);
  auto X = [&](cplx u) { return size / 2 + (u.real() - centre.real()) * scale; };
  auto Y = [&](cplx u) { return size / 2 - (u.imag() - centre.imag()) * scale; };

  std::ostringstream os;
  os << std::setprecision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#ccc\"/>"
     << "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#ccc\"/>\n";
  os << "<defs><clipPath id=\"frame\"><rect width=\"800\" height=\"800\"/></clipPath></defs>\n";
  os << "<g clip-path=\"url(#frame)\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\">\n";
  for (const auto& cv : d.curves) {
    if (cv.points.empty()) continue;
    os << "<polyline data-origin=\"" << cv.origin << "\" data-terminus=\"" << cv.terminus << "\" points=\"";
    for (cplx u : cv.points) {
      const double x = std::clamp(X(u), -1e4, 1e4), y = std::clamp(Y(u), -1e4, 1e4);
      os << x << "," << y << " ";
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  for (cplx u : d.turning_points_u) {
    const double x = X(u), y = Y(u);
    os << "<path d=\"M" << x - 5 << "," << y - 5 << " L" << x + 5 << "," << y + 5 << " M" << x - 5 << "," << y + 5
       << " L" << x + 5 << "," << y - 5 << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (cplx u : d.double_poles_u) os << "<circle cx=\"" << X(u) << "\" cy=\"" << Y(u) << "\" r=\"5\" fill=\"black\"/>\n";
  {
    const double x = X(d.simple_pole_u), y = Y(d.simple_pole_u);
    os << "<path d=\"M" << x << "," << y - 6 << " L" << x + 6 << "," << y + 5 << " L" << x - 6 << "," << y + 5
       << " Z\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::vector<cplx>> pushforward_t(const StokesDiagram& d) {
  std::function<cplx(cplx)> t_of_u;
  if (d.equation == Equation::D6) {
    const UChart chart{d.p};
    t_of_u = [chart](cplx u) { return chart.t_of_u(u); };
  } else {
    const D7UChart chart{d.c7};
    t_of_u = [chart](cplx u) { return chart.t_of_u(u); };
  }
  std::vector<std::vector<cplx>> out;
  for (const auto& cv : d.curves) {
    std::vector<cplx> pts;
    for (cplx u : cv.points) pts.push_back(t_of_u(u));
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace p3wkb
