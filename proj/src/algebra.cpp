#include "p3wkb/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "p3wkb/errors.hpp"

namespace p3wkb {

std::string Parameters::genericity_violation(double rel_tol) const {
  const double s = scale();
  if (!(s > 0)) return "c_inf = c_0 = 0";
  if (std::abs(c_inf) <= rel_tol * s) return "c_inf = 0";
  if (std::abs(c_0) <= rel_tol * s) return "c_0 = 0";
  if (std::abs(c_inf * c_inf - c_0 * c_0) <= rel_tol * s * s) return "c_inf^2 - c_0^2 = 0";
  if (std::abs(c_inf * c_inf + c_0 * c_0) <= rel_tol * s * s) return "c_inf^2 + c_0^2 = 0";
  return {};
}

Parameters Parameters::make(cplx c_inf, cplx c_0) {
  Parameters p{c_inf, c_0};
  if (auto why = p.genericity_violation(); !why.empty()) throw DegenerateError("non-generic parameters: " + why);
  return p;
}

std::string to_string(Sheet s) {
  switch (s) {
    case Sheet::Inf1: return "inf1";
    case Sheet::Inf2: return "inf2";
    case Sheet::Inf3: return "inf3";
    case Sheet::Inf4: return "inf4";
    case Sheet::ZeroCInf: return "0_cinf";
    case Sheet::ZeroC0: return "0_c0";
    case Sheet::SimplePole: return "simple-pole";
    case Sheet::Generic: return "generic";
  }
  return "?";
}

cplx rhs_F(cplx l, cplx t, const Parameters& p) {
  return l * l * l / (t * t) - p.c_inf * l * l / (t * t) + p.c_0 / t - 1.0 / l;
}

cplx rhs_dF(cplx l, cplx t, const Parameters& p) {
  if (l == cplx(0)) throw SingularError("Delta: lambda0 = 0");
  return 3.0 * l * l / (t * t) - 2.0 * p.c_inf * l / (t * t) + 1.0 / (l * l);
}

cplx quartic(cplx l, cplx t, const Parameters& p) {
  return l * l * l * l - p.c_inf * l * l * l + p.c_0 * t * l - t * t;
}

Sheet classify_sheet(cplx t, cplx l, const Parameters& p) {
  const double rho = std::abs(t) / (p.scale() * p.scale());
  if (rho >= 1e2) {
    const cplx w = l / std::sqrt(t);
    const std::array<cplx, 4> target{1.0, -1.0, I, -I};
    const std::array<Sheet, 4> tag{Sheet::Inf1, Sheet::Inf2, Sheet::Inf3, Sheet::Inf4};
    int best = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(w - target[k]) < std::abs(w - target[best])) best = k;
    return tag[best];
  }
  if (rho <= 1e-2) {
    const double d_cinf = std::abs(l - p.c_inf) / std::abs(p.c_inf);
    const double d_c0 = std::abs(l * p.c_0 / t - 1.0);
    const double d_sp = std::abs(l * l * p.c_inf / (p.c_0 * t) - 1.0);
    if (d_cinf <= d_c0 && d_cinf <= d_sp) return Sheet::ZeroCInf;
    if (d_c0 <= d_sp) return Sheet::ZeroC0;
    return Sheet::SimplePole;
  }
  return Sheet::Generic;
}

std::array<BranchPoint, 4> lambda0_branches(cplx t, const Parameters& p) {
  if (t == cplx(0)) throw SingularError("lambda0_branches: t = 0 is a singular point");
  auto roots = poly_roots({-t * t, p.c_0 * t, 0.0, -p.c_inf, 1.0});
  std::array<BranchPoint, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = BranchPoint{t, roots[k], classify_sheet(t, roots[k], p), 1};
  return out;
}

cplx delta(const BranchPoint& b, const Parameters& p) { return rhs_dF(b.lambda0, b.t, p); }

cplx mu0(const BranchPoint& b, const Parameters& p) {
  if (b.lambda0 == cplx(0)) throw SingularError("mu0: lambda0 = 0");
  return 0.5 + p.c_0 / (2.0 * b.lambda0) - b.t / (2.0 * b.lambda0 * b.lambda0);
}

cplx sign_reference(Sheet s, cplx t, cplx l, const Parameters& p) {
  switch (s) {
    case Sheet::Inf1:
    case Sheet::Inf2:
    case Sheet::Inf3:
    case Sheet::Inf4: return 2.0 * l / t;
    case Sheet::ZeroCInf: return p.c_inf / t;
    case Sheet::ZeroC0: return p.c_0 / t;
    default: return 0.0;
  }
}

cplx r_minus1(const BranchPoint& b, const Parameters& p) {
  cplx s = std::sqrt(delta(b, p));
  const cplx ref = sign_reference(b.sheet, b.t, b.lambda0, p);
  if (ref != cplx(0) && (s * std::conj(ref)).real() < 0) s = -s;
  return double(b.sign) * s;
}

std::array<cplx, 4> turning_cubic(const Parameters& p) {
  const cplx a = p.c_inf, b = p.c_0;
  const cplx a2 = a * a, b2 = b * b;
  return {4.0 * a2 * a * b2 * b, 6.0 * a2 * b2 - 27.0 * a2 * a2 - 27.0 * b2 * b2, 192.0 * a * b, -256.0};
}

cplx cubic_discriminant(const std::array<cplx, 4>& c) {
  const cplx d = c[0], cc = c[1], b = c[2], a = c[3];
  return 18.0 * a * b * cc * d - 4.0 * b * b * b * d + b * b * cc * cc - 4.0 * a * cc * cc * cc -
         27.0 * a * a * d * d;
}

TurningPointSet turning_points(const Parameters& p) {
  if (auto why = p.genericity_violation(); !why.empty()) throw DegenerateError("turning_points: " + why);
  const UChart chart{p};
  const auto us = chart.turning_points_u();
  const auto cub = turning_cubic(p);
  auto ts = poly_roots({cub[0], cub[1], cub[2], cub[3]});
  TurningPointSet out;
  std::array<bool, 3> used{};
  for (int k = 0; k < 3; ++k) {
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 3; ++j) {
      if (used[j]) continue;
      double d = std::abs(chart.t_of_u(us[j]) - ts[k]);
      if (d < bd) bd = d, best = j;
    }
    used[best] = true;
    out.t[k] = ts[k];
    out.u[k] = us[best];
    out.lambda0[k] = chart.lambda0_of_u(us[best]);
  }
  return out;
}

cplx UChart::u_of_branch(const BranchPoint& b) const {
  const cplx m = mu0(b, p);
  if (m == cplx(0)) throw SingularError("u_of_branch: mu0 = 0");
  return (1.0 - m) / m;
}

cplx UChart::t_of_u(cplx u) const {
  const cplx s = p.c_inf + p.c_0, d = p.c_inf - p.c_0;
  return (u + 1.0) * (u + 1.0) * (s * s * u * u - d * d) / (16.0 * u * u);
}

cplx UChart::lambda0_of_u(cplx u) const {
  const cplx s = p.c_inf + p.c_0, d = p.c_inf - p.c_0;
  return (u + 1.0) * (s * u + d) / (4.0 * u);
}

cplx UChart::dt_du(cplx u) const {
  const cplx s = p.c_inf + p.c_0, d = p.c_inf - p.c_0;
  return (1.0 + u) * (s * s * u * u * u + d * d) / (8.0 * u * u * u);
}

cplx UChart::q(cplx u) const {
  const cplx s2 = (p.c_inf + p.c_0) * (p.c_inf + p.c_0), d2 = (p.c_inf - p.c_0) * (p.c_inf - p.c_0);
  const cplx num = s2 * u * u * u + d2;
  const cplx den = s2 * u * u - d2;
  const cplx u2 = u * u;
  if (u == cplx(0) || u == cplx(-1) || den == cplx(0)) throw SingularError("q(u): pole");
  return num * num * num / ((u + 1.0) * u2 * u2 * den * den);
}

std::array<cplx, 3> UChart::turning_points_u() const {
  const cplx r = p.c_m() / p.c_p();
  auto roots = poly_roots({r * r, 0.0, 0.0, 1.0});
  return {roots[0], roots[1], roots[2]};
}

namespace {

// (1/2 pi i) * contour integral of a continuously chosen sqrt(q) on |u - centre| = r.
cplx contour_sqrt_q(const UChart& ch, cplx centre, double r, int m = 512) {
  cplx sum = 0, prev = 0;
  for (int k = 0; k < m; ++k) {
    const double th = 2 * std::numbers::pi * k / m;
    const cplx e = std::exp(I * th), u = centre + r * e;
    cplx s = std::sqrt(ch.q(u));
    if (k > 0 && std::abs(s + prev) < std::abs(s - prev)) s = -s;
    prev = s;
    sum += s * I * r * e;
  }
  return sum * (2 * std::numbers::pi / m) / (2 * std::numbers::pi * I);
}

}  // namespace

std::vector<Residue> residues(const Parameters& p) {
  const UChart ch{p};
  const auto tps = ch.turning_points_u();
  std::vector<cplx> sing{tps[0], tps[1], tps[2], -1.0, 0.0, ch.double_pole_cinf(), ch.double_pole_c0()};
  auto radius_at = [&](cplx c) {
    double d = std::numeric_limits<double>::infinity();
    for (auto s : sing)
      if (std::abs(s - c) > 0) d = std::min(d, std::abs(s - c));
    return 0.4 * d;
  };
  std::vector<Residue> out;
  auto add = [&](const std::string& where, cplx u, cplx closed, cplx numeric) {
    if (std::abs(numeric + closed) < std::abs(numeric - closed)) numeric = -numeric;
    out.push_back({where, u, closed, numeric});
  };
  double big = 0;
  for (auto s : sing) big = std::max(big, std::abs(s));
  add("inf", 0.0, p.c_p(), -contour_sqrt_q(ch, 0.0, 4 * big + 1, 4096));
  add("0", 0.0, p.c_m(), contour_sqrt_q(ch, 0.0, radius_at(0.0)));
  add("double_c_inf", ch.double_pole_cinf(), p.c_inf,
      contour_sqrt_q(ch, ch.double_pole_cinf(), radius_at(ch.double_pole_cinf())));
  add("double_c_0", ch.double_pole_c0(), p.c_0,
      contour_sqrt_q(ch, ch.double_pole_c0(), radius_at(ch.double_pole_c0())));
  return out;
}

D7Parameters D7Parameters::make(cplx c) {
  if (c == cplx(0)) throw DegenerateError("D7 requires c != 0");
  return {c};
}

cplx d7_rhs_F(cplx l, cplx t, cplx c) { return -2.0 * l * l / (t * t) + c / t - 1.0 / l; }

cplx d7_rhs_dF(cplx l, cplx t, cplx) {
  if (l == cplx(0)) throw SingularError("Delta: lambda0 = 0");
  return -4.0 * l / (t * t) + 1.0 / (l * l);
}

cplx d7_cubic(cplx l, cplx t, cplx c) { return -2.0 * l * l * l + c * t * l - t * t; }

std::array<cplx, 3> d7_lambda0_roots(cplx t, cplx c) {
  if (t == cplx(0)) throw SingularError("t = 0 is a singular point");
  auto r = poly_roots({-t * t, c * t, 0.0, -2.0});
  return {r[0], r[1], r[2]};
}

cplx D7UChart::u_of_lambda(cplx t, cplx l) const {
  const cplx m = (c * l - t) / (2.0 * l * l);
  if (m == cplx(0)) throw SingularError("u: mu0 = 0");
  return 1.0 / m;
}

cplx D7UChart::q(cplx u) const {
  if (u == cplx(0) || u == c) throw SingularError("q(u): pole");
  const cplx a = 3.0 * u - 2.0 * c;
  return a * a * a / (u * (u - c) * (u - c));
}

}  // namespace p3wkb
