#include "p3wkb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "p3wkb/borel.hpp"
#include "p3wkb/errors.hpp"
#include "p3wkb/geometry.hpp"
#include "p3wkb/series.hpp"
#include "p3wkb/voros.hpp"
#include "p3wkb/walls.hpp"

namespace p3wkb {

cplx Expansion::sum() const {
  cplx s = 0;
  for (auto v : terms) s += v;
  return s;
}

namespace {

const char* const kQuantities[] = {"lambda0", "mu0", "lambda(0)", "mu(0)", "R-1", "R+", "R-"};

// Leading terms with the "+" branch conventions; s = t^{1/2}.
std::vector<Expansion> expansions_plus(Sheet sheet, const Parameters& p, cplx t, cplx s, double eta, bool corrected) {
  const cplx a = p.c_inf, b = p.c_0, h = 1.0 / eta;
  const cplx a2 = a * a, b2 = b * b, h2 = h * h;
  std::vector<Expansion> out(7);
  auto &l0 = out[0], &m0 = out[1], &l = out[2], &m = out[3], &r1 = out[4], &rp = out[5], &rm = out[6];
  switch (sheet) {
    case Sheet::Inf1:
    case Sheet::Inf2: {
      // the second sheet is the first with t^{1/2} -> -t^{1/2}
      const double e = sheet == Sheet::Inf1 ? 1.0 : -1.0;
      const cplx st = e * s;
      l0.terms = {st, (a - b) / 4.0, (a - b) * (3.0 * a + b) / 32.0 / st};
      m0.terms = {(a + b) / 4.0 / st};
      l = l0;
      m.terms = {(a + b - h) / 4.0 / st};
      r1.terms = {2.0 / st, -(a + b) / 4.0 / t, (3.0 * a - b) * (a - 3.0 * b) / 64.0 / (st * t)};
      for (int pm : {1, -1}) {
        const double g = pm;
        // as printed, the second sheet flips the sign of c_0 eta in the t^{-1} term
        const double gb = (sheet == Sheet::Inf2 && !corrected) ? -g : g;
        const cplx third =
            (g * (3.0 * a2 - 10.0 * a * b + 3.0 * b2) * eta * eta - 10.0 * a * eta + 6.0 * b * eta - g) / (64.0 * eta);
        auto& r = pm > 0 ? rp : rm;
        r.terms = {g * 2.0 * eta / st, -(g * a * eta + gb * b * eta - 1.0) / 4.0 / t, third / (st * t)};
      }
      break;
    }
    case Sheet::Inf3:
    case Sheet::Inf4: {
      const double e = sheet == Sheet::Inf3 ? 1.0 : -1.0;
      const cplx st = e * s;
      l0.terms = {I * st, (a + b) / 4.0, -I * (a + b) * (3.0 * a - b) / 32.0 / st};
      m0.terms = {1.0, I * (a - b) / 4.0 / st};
      l = l0;
      m.terms = {1.0, I * (a - b + h) / 4.0 / st};
      r1.terms = {2.0 * I / st, -(a - b) / 4.0 / t, -I * (3.0 * a + b) * (a + 3.0 * b) / 64.0 / (st * t)};
      for (int pm : {1, -1}) {
        const double g = pm;
        // as printed, the third sheet carries -6 c_0 eta in the t^{-3/2} numerator
        const double c0sign = (sheet == Sheet::Inf3 && !corrected) ? -1.0 : 1.0;
        const cplx third = I *
                           (-g * (3.0 * a2 + 10.0 * a * b + 3.0 * b2) * eta * eta + 10.0 * a * eta +
                            c0sign * 6.0 * b * eta + g) /
                           (64.0 * eta);
        auto& r = pm > 0 ? rp : rm;
        r.terms = {g * 2.0 * I * eta / st, (-g * a * eta + g * b * eta + 1.0) / 4.0 / t, third / (st * t)};
      }
      break;
    }
    case Sheet::ZeroCInf: {
      l0.terms = {a, -b / a2 * t, (a2 - 2.0 * b2) / (a2 * a2 * a) * t * t};
      m0.terms = {(a + b) / (2.0 * a), -(a2 - b2) / (2.0 * a2 * a2) * t,
                  -3.0 * b * (a2 - b2) / (2.0 * a2 * a2 * a2 * a) * t * t};
      // as printed, the t^2 numerator has +c_0^2 eta^{-2}
      const double bh = corrected ? -1.0 : 1.0;
      l.terms = {a, -b / (a2 - h2) * t,
                 (a2 * a2 - 2.0 * a2 * b2 - 2.0 * a2 * h2 + bh * b2 * h2 + h2 * h2) /
                     (a * (a2 - 4.0 * h2) * (a2 - h2) * (a2 - h2)) * t * t};
      m.terms = {(a + b - h) / (2.0 * a), -(a2 - (b - h) * (b - h)) / (2.0 * a2 * (a2 - h2)) * t,
                 -3.0 * (a2 * b - b2 * b - a2 * h + 3.0 * b2 * h - 3.0 * b * h2 + h2 * h) /
                     (2.0 * a2 * a * (a2 - 4.0 * h2) * (a2 - h2)) * t * t};
      r1.terms = {a / t, -2.0 * b / a2, (5.0 * a2 - 9.0 * b2) / (2.0 * a2 * a2 * a) * t};
      for (int pm : {1, -1}) {
        const double g = pm;
        // as printed, the t coefficient of R_+ belongs to R_- and vice versa
        const double k = corrected ? -g : g;
        const cplx num = k * eta * (-5.0 * a2 * a2 * a2 + 9.0 * a2 * a2 * b2) + (4.0 * a2 * a2 * a - 6.0 * a2 * a * b2) +
                         k * h * (14.0 * a2 * a2 + a2 * b2) + h2 * (-8.0 * a2 * a - 12.0 * a * b2) +
                         k * h2 * h * (-13.0 * a2 - 4.0 * b2) + 4.0 * h2 * h2 * a + k * 4.0 * h2 * h2 * h;
        const cplx den = 2.0 * a2 * std::pow(a - k * h, 3) * (a + k * h) * (a + k * h) * (a2 - 4.0 * h2);
        auto& r = pm > 0 ? rp : rm;
        r.terms = {g * a * eta / t, -g * 2.0 * b * eta / (a2 - h2), num / den * t};
      }
      break;
    }
    case Sheet::ZeroC0: {
      l0.terms = {t / b, a / (b2 * b2) * t * t, (3.0 * a2 - b2) / (b2 * b2 * b2 * b) * t * t * t};
      m0.terms = {(a + b) / (2.0 * b), (a2 - b2) / (2.0 * b2 * b2) * t};
      l.terms = {t / b, a / (b2 * (b2 - h2)) * t * t,
                 (3.0 * a2 - b2 + h2) / (b2 * b * (b2 - 4.0 * h2) * (b2 - h2)) * t * t * t};
      m.terms = {(a + b - h) / (2.0 * (b - h)),
                 (a2 - (b - h) * (b - h)) / (2.0 * b * (b - 2.0 * h) * (b - h) * (b - h)) * t};
      r1.terms = {b / t, -2.0 * a / b2, (5.0 * b2 - 9.0 * a2) / (2.0 * b2 * b2 * b) * t};
      for (int pm : {1, -1}) {
        const double g = pm;
        const cplx num = g * eta * (5.0 * b2 * b2 - 9.0 * a2 * b2) + (11.0 * b2 * b - 13.0 * a2 * b) +
                         g * h * (-2.0 * a2 + b2) - 11.0 * h2 * b - g * 6.0 * h2 * h;
        // the printed denominators are (c_0 + 1/eta) in the constant term for both signs
        // and 2 c_0^2 (c_inf - 1/eta)^3 (c_inf + 1/eta)(c_inf^2 - 2/eta^2) in the t term
        const cplx den = corrected ? 2.0 * b2 * (b - g * h) * std::pow(b + g * h, 3) * (b + 2.0 * g * h)
                                   : 2.0 * b2 * std::pow(a - h, 3) * (a + h) * (a2 - 2.0 * h2);
        const cplx r0 = -g * 2.0 * a * eta / (b * (b + (corrected ? g : 1.0) * h));
        auto& r = pm > 0 ? rp : rm;
        r.terms = {(g * b * eta + 1.0) / t, r0, num / den * t};
      }
      break;
    }
    default: throw DomainError("asymptotic_expansions: sheet " + to_string(sheet) + " has no expansion");
  }
  return out;
}

cplx eval_series(const EtaSeries& s, double eta) {
  cplx acc = 0;
  for (int k = s.size() - 1; k >= 0; --k) acc = acc / eta + s.term(k).value();
  return acc * std::pow(eta, s.offset());
}

bool at_infinity(Sheet s) { return s == Sheet::Inf1 || s == Sheet::Inf2 || s == Sheet::Inf3 || s == Sheet::Inf4; }

}  // namespace

std::vector<Expansion> asymptotic_expansions(Sheet sheet, int sign, const Parameters& p, cplx t, cplx sqrt_t,
                                             double eta, bool corrected) {
  auto out = expansions_plus(sheet, p, t, sqrt_t, eta, corrected);
  if (sign < 0) {
    for (auto& v : out[4].terms) v = -v;
    std::swap(out[5], out[6]);
  }
  return out;
}

std::vector<AsymptoticSample> asymptotic_samples(const Parameters& p, double abs_t_inf, double abs_t_zero,
                                                 double arg_t, double eta, int sign, bool corrected) {
  std::vector<AsymptoticSample> out;
  for (Sheet sheet : {Sheet::Inf1, Sheet::Inf2, Sheet::Inf3, Sheet::Inf4, Sheet::ZeroCInf, Sheet::ZeroC0}) {
    const cplx t = std::polar(at_infinity(sheet) ? abs_t_inf : abs_t_zero, arg_t);
    const auto bs = lambda0_branches(t, p);
    auto it = std::find_if(bs.begin(), bs.end(), [&](const BranchPoint& b) { return b.sheet == sheet; });
    if (it == bs.end()) throw Error("asymptotic_samples: no root on sheet " + to_string(sheet));
    BranchPoint b = *it;
    b.sign = sign;

    // t^{1/2} is the root that makes the leading term of lambda0 match the sheet label
    cplx s = std::sqrt(t);
    const cplx unit = sheet == Sheet::Inf1 ? cplx(1) : sheet == Sheet::Inf2 ? cplx(-1) : sheet == Sheet::Inf3 ? I : -I;
    if (std::abs(s - b.lambda0 / unit) > std::abs(-s - b.lambda0 / unit)) s = -s;

    const auto zp = zero_param_solution(b, p, 14, 16);
    const auto rp = riccati_pair(zp, r_minus1(b, p));
    const cplx computed[7] = {b.lambda0,
                              mu0(b, p),
                              eval_series(zp.lambda, eta),
                              eval_series(zp.mu, eta),
                              r_minus1(b, p),
                              eval_series(rp.plus, eta),
                              eval_series(rp.minus, eta)};
    const auto printed = asymptotic_expansions(sheet, sign, p, t, s, eta, corrected);
    for (int q = 0; q < 7; ++q) {
      AsymptoticSample a;
      a.sheet = sheet;
      a.sign = sign;
      a.quantity = kQuantities[q];
      a.t = t;
      a.eta = eta;
      a.computed = computed[q];
      a.printed = printed[q];
      const double diff = std::abs(a.computed - a.printed.sum());
      a.rel_err = diff / std::max(std::abs(a.computed), 1e-300);
      a.tail_ratio = diff / std::max(std::abs(a.printed.last()), 1e-300);
      out.push_back(std::move(a));
    }
  }
  return out;
}

double asymptotic_tolerance(const AsymptoticSample& s) {
  return at_infinity(s.sheet) ? 10.0 / std::sqrt(std::abs(s.t)) : 10.0 * std::abs(s.t);
}

double asymptotic_tail_tolerance(const AsymptoticSample& s) {
  return at_infinity(s.sheet) ? 10.0 / std::sqrt(std::abs(s.t)) : 100.0 * std::abs(s.t);
}

// ---------------------------------------------------------------- suites

namespace {

struct Outcome {
  double measured = 0;
  double tolerance = 0;
  std::string detail;
};

class Runner {
 public:
  explicit Runner(std::string suite) : suite_(std::move(suite)) {}

  void run(const std::string& name, int criterion, const std::function<Outcome()>& body) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.criterion = criterion;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      r.measured = o.measured;
      r.tolerance = o.tolerance;
      r.detail = o.detail;
      r.ok = o.measured <= o.tolerance && std::isfinite(o.measured);
    } catch (const std::exception& e) {
      r.ok = false;
      r.measured = std::numeric_limits<double>::infinity();
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(r));
  }

  // Passes when `body` throws E and fails otherwise.
  template <class E>
  void expect_throw(const std::string& name, int criterion, const std::function<void()>& body) {
    run(name, criterion, [&] {
      try {
        body();
      } catch (const E& e) {
        return Outcome{0, 0, e.what()};
      }
      return Outcome{1, 0, "no error raised"};
    });
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string short_complex(cplx z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string label(const Parameters& p) { return "c=(" + short_complex(p.c_inf) + ", " + short_complex(p.c_0) + ")"; }

// One parameter per chamber of the (Re c_inf, Re c_0) plane.
const std::vector<Parameters>& chamber_samples() {
  static const std::vector<Parameters> v{{{1, 1}, {3, 0.5}},   {{-1, 1}, {3, 0.5}},   {{-3, 1}, {1, 0.5}},
                                         {{-3, 1}, {-1, 0.5}}, {{-1, 1}, {-3, 0.5}},  {{1, 1}, {-3, 0.5}},
                                         {{3, 1}, {-1, 0.5}},  {{3, 1}, {1, 0.5}}};
  return v;
}

// Regular base points: fixed parameters and t away from the turning points.
std::vector<BranchPoint> regular_points(const Parameters& p, int count) {
  std::vector<BranchPoint> out;
  const auto tp = turning_points(p);
  const double s2 = p.scale() * p.scale();
  for (int k = 0; out.size() < static_cast<size_t>(count) && k < 64; ++k) {
    const cplx t = std::polar(s2 * (0.7 + 0.37 * (k % 5)), 0.3 + 1.9 * k);
    double dmin = 1e300;
    for (cplx x : tp.t) dmin = std::min(dmin, std::abs(x - t));
    if (dmin < 0.3 * s2) continue;
    const auto bs = lambda0_branches(t, p);
    out.push_back(bs[k % 4]);
  }
  return out;
}

const std::vector<std::pair<Parameters, BranchPoint>>& series_samples() {
  static const std::vector<std::pair<Parameters, BranchPoint>> v = [] {
    std::vector<std::pair<Parameters, BranchPoint>> out;
    const std::vector<Parameters> ps{{{2, 1}, {3, 0}}, {{2, 0}, {2, -1}}, {{-1, 1}, {3, 0.5}}, {{0.3, -2}, {-1.2, 0.7}},
                                     {{1.5, 0.5}, {-0.4, 1.1}}};
    for (const auto& p : ps) out.emplace_back(p, regular_points(p, 1).at(0));
    return out;
  }();
  return v;
}

// Each jet coefficient of each term of `res` relative to the largest matching coefficient among `parts`.
double relative_residual(const EtaSeries& res, const std::vector<EtaSeries>& parts, int top, int bottom) {
  double worst = 0;
  for (int pw = top; pw >= bottom; --pw) {
    const Jet r = res.coeff(pw);
    for (int k = 0; k <= r.order(); ++k) {
      double scale = 1e-300;
      for (const auto& s : parts)
        if (s.has_power(pw) || pw > s.offset()) {
          const Jet c = s.coeff(pw);
          if (k <= c.order()) scale = std::max(scale, std::abs(c[k]));
        }
      worst = std::max(worst, std::abs(r[k]) / scale);
    }
  }
  return worst;
}

double max_rel_jet(const Jet& a, const Jet& b, int upto) {
  double w = 0, s = 1e-300;
  for (int k = 0; k <= upto; ++k) s = std::max(s, std::abs(b[k]));
  for (int k = 0; k <= upto; ++k) w = std::max(w, std::abs(a[k] - b[k]) / s);
  return w;
}

// ---- series

std::vector<CheckResult> series_suite() {
  Runner run("series");
  const auto& samples = series_samples();

  run.run("equation residual through eta^-6", 6, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const auto zp = zero_param_solution(b, p, 8, 12);
      const auto& L = zp.lambda;
      const Jet t = Jet::variable(L.base(), L.min_jet_order()), t2 = t * t;
      const EtaSeries Lp = derive(L), Lpp = derive(Lp), L2 = L * L;
      const std::vector<EtaSeries> parts{(L * Lpp) * t2,
                                         (Lp * Lp) * t2,
                                         (L * Lp) * t,
                                         (L2 * L2).times_eta_power(2),
                                         (L2 * L * p.c_inf).times_eta_power(2),
                                         EtaSeries::from_jet(t2, 9).times_eta_power(2)};
      worst = std::max(worst, relative_residual(equation_residual(zp.model, L), parts, 2, -6));
    }
    return Outcome{worst, 1e-9, "5 regular base points"};
  });

  run.run("Riccati residual through eta^-6", 6, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const auto zp = zero_param_solution(b, p, 8, 12);
      const EtaSeries R = riccati_solution(zp, r_minus1(b, p));
      const Jet tt = Jet::variable(b.t, zp.jet_order);
      const std::vector<EtaSeries> parts{R * R, derive(R), (derive(zp.lambda) / zp.lambda) * R,
                                         zp.model.dF(zp.lambda, tt).times_eta_power(2)};
      worst = std::max(worst, relative_residual(riccati_residual(zp, R), parts, 2, -6));
    }
    return Outcome{worst, 1e-9, "5 regular base points"};
  });

  run.run("Hamiltonian system residual", 6, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const auto zp = zero_param_solution(b, p, 6, 10);
      const auto hr = hamiltonian_residual(zp.model, zp.lambda, zp.mu);
      worst = std::max(worst, series_max_abs(hr.dlambda.truncated(6)) / std::max(1.0, series_max_abs(zp.lambda)));
      worst = std::max(worst, series_max_abs(hr.dmu.truncated(6)) / std::max(1.0, series_max_abs(zp.mu) * p.scale()));
    }
    return Outcome{worst, 1e-9, ""};
  });

  run.run("odd lambda coefficients are exactly zero", 6, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const auto zp = zero_param_solution(b, p, 8, 12);
      for (int l = 1; l <= 8; l += 2) worst = std::max(worst, zp.lambda.coeff(-l).max_abs());
    }
    return Outcome{worst, 0, ""};
  });

  run.run("closed forms of lambda_2, R_0, R_1", 6, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const int K = 12;
      const auto zp = zero_param_solution(b, p, 8, K);
      const Jet t = Jet::variable(b.t, K);
      const Jet l0 = zp.lambda.term(0), l2 = zp.lambda.coeff(-2);
      const Jet d1 = derive(l0), d2 = derive(d1);
      const cplx ci = p.c_inf;
      const Jet D = 3.0 * l0 * l0 / (t * t) - 2.0 * ci * l0 / (t * t) + 1.0 / (l0 * l0);
      worst = std::max(worst, max_rel_jet(l2, (d2 - d1 * d1 / l0 + d1 / t) / D, 4));
      const EtaSeries R = riccati_solution(zp, r_minus1(b, p));
      const Jet Rm1 = R.coeff(1);
      const Jet R0 = -derive(Rm1) / (2.0 * Rm1) + d1 / l0 - 0.5 / t;
      worst = std::max(worst, max_rel_jet(R.coeff(0), R0, 4));
      const Jet g = d1 / l0;
      const Jet R1 = 1.0 / (2.0 * Rm1) *
                     (-R0 * R0 - derive(R0) + (2.0 * g - 1.0 / t) * R0 +
                      (6.0 * l0 / (t * t) - 2.0 * ci / (t * t) - 2.0 / (l0 * l0 * l0)) * l2 - g * g);
      worst = std::max(worst, max_rel_jet(R.coeff(-1), R1, 3));
    }
    return Outcome{worst, 1e-10, ""};
  });

  run.run("Backlund images satisfy the shifted Hamiltonian system", 7, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const auto zp = zero_param_solution(b, p, 6, 12);
      for (int j : {1, 2}) {
        const auto tr = backlund_apply(j, zp);
        const auto hr = hamiltonian_residual(tr.model, tr.lambda, tr.mu);
        const double sl = std::max(1.0, series_max_abs(tr.lambda)), sm = std::max(1.0, series_max_abs(tr.mu));
        worst = std::max(worst, series_max_abs(hr.dlambda.truncated(5)) / (sl * p.scale()));
        worst = std::max(worst, series_max_abs(hr.dmu.truncated(5)) / (sm * p.scale()));
      }
    }
    return Outcome{worst, 1e-9, "T_1 and T_2"};
  });

  run.run("Backlund images equal the recomputed solution through eta^-4", 7, [&] {
    double worst = 0;
    for (const auto& [p, b] : samples) {
      const auto zp = zero_param_solution(b, p, 6, 12);
      for (int j : {1, 2}) {
        const auto tr = backlund_apply(j, zp);
        const auto direct = zero_param_solution(tr.model, b.t, tr.lambda.term(0).value(), 6, 12);
        for (int pw = 0; pw >= -4; --pw)
          worst = std::max(worst, max_rel_jet(tr.lambda.coeff(pw), direct.lambda.coeff(pw), 2));
      }
    }
    return Outcome{worst, 1e-9, "T_1 and T_2"};
  });

  run.run("D7 equation and Riccati residuals", 6, [&] {
    const cplx c{2.0, 1.0}, t0{1.5, -0.7};
    double worst = 0;
    for (cplx l : d7_lambda0_roots(t0, c)) {
      const auto zp = zero_param_solution(SeriesModel::d7(c), t0, l, 6, 10);
      worst = std::max(worst, series_max_abs(equation_residual(zp.model, zp.lambda).truncated(7)) /
                                  std::max(1.0, series_max_abs(zp.lambda * zp.lambda) * std::norm(t0)));
      const cplx r1 = std::sqrt(d7_rhs_dF(l, t0, c));
      worst = std::max(worst, series_max_abs(riccati_residual(zp, riccati_solution(zp, r1)).truncated(6)) /
                                  std::max(1.0, std::norm(r1)));
    }
    return Outcome{worst, 1e-9, ""};
  });
  return run.take();
}

// ---- voros

std::vector<CheckResult> voros_suite() {
  Runner run("voros");
  for (const auto& kind : difference_equation_kinds()) {
    run.run("difference equation " + kind, 2, [&] {
      const auto rep = verify_difference_equation(kind, 10);
      // pass: exact agreement through z^{-19}
      return Outcome{rep.ok && rep.checked_through <= -19 ? 0.0 : 1.0, 0,
                     "checked through z^" + std::to_string(rep.checked_through) + (rep.ok ? "" : "; " + rep.detail)};
    });
  }

  run.run("F(z) = G(2z) - G(z) exactly through n = 20", 3, [&] {
    const Laurent f = f_series(20), g = g_series(20);
    int bad = 0;
    for (int n = 1; n <= 20; ++n) {
      Rational two = 1;
      for (int j = 0; j < 2 * n - 1; ++j) two /= 2;
      if (f.coeff(1 - 2 * n) != g.coeff(1 - 2 * n) * two - g.coeff(1 - 2 * n)) ++bad;
    }
    return Outcome{double(bad), 0, "mismatching coefficients"};
  });

  run.run("closed form at d6:inf3:+, c=(2, 2-i)", 0, [&] {
    const auto w = voros_closed_form(EndpointSpec::parse("d6:inf3:+"), Parameters{2.0, {2.0, -1.0}}, 1);
    return Outcome{rel(w.coefficient(1), -1.0 / (24.0 * cplx(0, 0.5))), 1e-14, ""};
  });

  run.run("closed forms: sign flip and homogeneity", 0, [&] {
    double worst = 0;
    for (const auto& p : chamber_samples())
      for (const char* s : {"d6:inf1:+", "d6:inf2:+", "d6:inf3:+", "d6:inf4:+", "d6:zero_cinf:+", "d6:zero_c0:+"}) {
        const auto spec = EndpointSpec::parse(s);
        const auto a = voros_closed_form(spec, p, 5), b = voros_closed_form(spec.flipped(), p, 5);
        const auto c = voros_closed_form(spec, p.scaled(2.5), 5);
        for (int n = 1; n <= 5; ++n) {
          worst = std::max(worst, std::abs(a.coefficient(n) + b.coefficient(n)) / std::abs(a.coefficient(n)));
          worst = std::max(worst, rel(c.coefficient(n), a.coefficient(n) * std::pow(2.5, 2 * n - 1)));
        }
      }
    return Outcome{worst, 1e-12, ""};
  });

  for (const char* s : {"d6:inf3:+", "d6:inf3:-", "d6:zero_cinf:+", "d6:zero_cinf:-", "d6:zero_c0:+", "d6:zero_c0:-"}) {
    run.run(std::string("numeric oracle vs closed form ") + s, 1, [&] {
      const auto spec = EndpointSpec::parse(s);
      double worst = 0;
      for (const auto& p : chamber_samples()) {
        const auto closed = voros_closed_form(spec, p, 2);
        for (int n = 1; n <= 2; ++n)
          worst = std::max(worst, rel(voros_numeric_oracle(spec, p, n).value, closed.coefficient(n)));
      }
      return Outcome{worst, 1e-5, "8 chambers, n = 1, 2"};
    });
  }
  for (const char* s : {"d7:zero_c:+", "d7:zero_c:-"}) {
    run.run(std::string("numeric oracle vs closed form ") + s, 1, [&] {
      const auto spec = EndpointSpec::parse(s);
      double worst = 0;
      for (cplx c : {cplx(0.2, 1), cplx(-0.2, 1), cplx(-1, -0.5), cplx(2, 1)}) {
        const auto closed = voros_closed_form(spec, D7Parameters{c}, 2);
        for (int n = 1; n <= 2; ++n)
          worst = std::max(worst, rel(voros_numeric_oracle(spec, D7Parameters{c}, n).value, closed.coefficient(n)));
      }
      return Outcome{worst, 1e-5, "c in {0.2+i, -0.2+i, -1-0.5i, 2+i}, n = 1, 2"};
    });
  }
  return run.take();
}

// ---- borel

cplx sum_value(BorelKind k, cplx c, double eta, Side s) { return borel_sum(k, c, eta, s).value.value(); }

std::vector<CheckResult> borel_suite() {
  Runner run("borel");
  for (BorelKind k : {BorelKind::F, BorelKind::G}) {
    run.run("kernel Taylor gate " + to_string(k), 4, [&] {
      const auto gate = validate_kernel(k, 8);
      return Outcome{gate.ok ? 0.0 : 1.0, 0, "checked through n = " + std::to_string(gate.checked_through) +
                                                 (gate.ok ? "" : "; " + gate.detail)};
    });
  }
  const std::vector<std::pair<cplx, double>> pts{{3, 1}, {{7, 2}, 1}, {{0.5, 0.2}, 2}, {{1, -3}, 1.5}, {{0.3, 0.1}, 1}};
  for (BorelKind k : {BorelKind::F, BorelKind::G}) {
    run.run("Laplace integral vs S-[" + to_string(k) + "]", 4, [&] {
      double worst = 0;
      for (auto [c, eta] : pts) {
        const cplx cf = sum_value(k, c, eta, Side::Minus);
        worst = std::max(worst, std::abs(laplace_oracle(k, c, eta) - cf) / std::max(1.0, std::abs(cf)));
      }
      return Outcome{worst, 1e-8, "5 points with Re(c eta) > 0"};
    });
  }
  run.run("jump ratios across the imaginary axis", 4, [&] {
    double worst = 0;
    for (int j = 0; j < 12; ++j) {
      const double r = 0.3 + 0.23 * j, delta = (j % 2 ? 1 : -1) * 0.01 * (1 + j % 4), eta = 0.5 + 0.29 * j;
      const cplx c = std::polar(r, M_PI / 2 + delta), z = c * eta;
      const cplx rf = std::exp(sum_value(BorelKind::F, c, eta, Side::Plus) - sum_value(BorelKind::F, c, eta, Side::Minus));
      const cplx rg = std::exp(sum_value(BorelKind::G, c, eta, Side::Plus) - sum_value(BorelKind::G, c, eta, Side::Minus));
      worst = std::max({worst, rel(rf, 1.0 + std::exp(2 * M_PI * I * z)), rel(rg, 1.0 - std::exp(2 * M_PI * I * z))});
    }
    return Outcome{worst, 1e-10, "12 points near arg c = pi/2"};
  });
  run.run("duplication S-[F](c) = S-[G](2c) - S-[G](c)", 3, [&] {
    double worst = 0;
    for (int j = 0; j < 20; ++j) {
      const cplx c{0.1 + 0.2 * j, 4.0 * std::cos(0.9 * j)};
      const double eta = 0.5 + 0.13 * j;
      const cplx lhs = sum_value(BorelKind::F, c, eta, Side::Minus);
      const cplx rhs = sum_value(BorelKind::G, 2.0 * c, eta, Side::Minus) - sum_value(BorelKind::G, c, eta, Side::Minus);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    return Outcome{worst, 1e-10, "20 points"};
  });
  run.run("G at c = 3, eta = 1", 0, [&] {
    const double expect = std::lgamma(3.0) - 0.5 * std::log(2 * M_PI) - 3 * (std::log(3.0) - 1) + 0.5 * std::log(3.0);
    return Outcome{std::abs(sum_value(BorelKind::G, 3.0, 1, Side::Minus) - expect), 1e-14, ""};
  });
  run.run("connection multiplier W2, t0", 9, [&] {
    const auto m = connection_multiplier("W2", Position::T0, Parameters{2.0, {2.0, -1.0}}, 10);
    return Outcome{std::abs(m.value - (1.0 + std::exp(-10 * M_PI))), 1e-15, m.expression};
  });
  run.run("connection multiplier W4, outside the triangle", 9, [&] {
    const Parameters w4{{-2, 1}, {2, 0.5}};
    const cplx e = std::exp(M_PI * I * (w4.c_inf + w4.c_0) * 3.0);
    const auto m = connection_multiplier("W4", Position::OutsideTriangle, w4, 3);
    const auto mi = connection_multiplier("W4", Position::OutsideTriangle, w4, 3, -1);
    return Outcome{std::max(rel(m.value, 1.0 + e), rel(mi.value, 1.0 / (1.0 + e))), 1e-15, m.expression};
  });
  run.run("connection multipliers equal to 1", 9, [&] {
    const Parameters w2{2.0, {2.0, -1.0}}, w4{{-2, 1}, {2, 0.5}}, w3{{0, 1}, {3, 0.5}};
    const double d = std::abs(connection_multiplier("W2", Position::T1, w2, 3).value - 1.0) +
                     std::abs(connection_multiplier("W4", Position::InsideTriangle, w4, 3).value - 1.0) +
                     std::abs(connection_multiplier("W3", Position::OutsideLoop, w3, 3).value - 1.0);
    return Outcome{d, 0, "W2 t1, W4 inside-triangle, W3 outside-loop"};
  });
  run.expect_throw<UnsupportedError>("inside-loop is rejected on W3", 9, [] {
    connection_multiplier("W3", Position::InsideLoop, Parameters{{0, 1}, {3, 0.5}}, 3);
  });
  run.expect_throw<UnsupportedError>("inside-loop is rejected on W5", 9, [] {
    connection_multiplier("W5", Position::InsideLoop, Parameters{{-3, 1}, {0, 0.5}}, 3);
  });
  return run.take();
}

// ---- geometry and walls

struct DiagramCase {
  bool d7;
  cplx a, b;  // (c_inf, c_0), or c in a for D7
  const char* verdict;
};

const std::vector<DiagramCase>& diagram_cases() {
  static const std::vector<DiagramCase> v{
      {false, {2, 1}, 3, "no degeneration"},         {false, 1.9, {2, -1}, "no degeneration"},
      {false, 2.1, {2, -1}, "no degeneration"},      {false, {1, 1}, {3, 0.5}, "no degeneration"},
      {false, {-3, 1}, {-1, 0.5}, "no degeneration"}, {false, {2, 1}, {0, 3}, "loop-type"},
      {false, {5, 1}, {0, 2}, "loop-type"},          {false, {0, 1}, {3, 0.5}, "loop-type"},
      {false, {-3, 1}, {0, 0.5}, "loop-type"},       {false, {0, 3}, {1, -2}, "loop-type"},
      {false, 2, {2, -1}, "triangle-type"},          {false, {2, 1}, {2, 0.5}, "triangle-type"},
      {false, {-2, 1}, {2, 0.5}, "triangle-type"},   {false, {-2, 1}, {-2, 0.5}, "triangle-type"},
      {false, 3, {3, -1}, "triangle-type"},          {true, {0.2, 1}, 0, "no degeneration"},
      {true, {-0.2, 1}, 0, "no degeneration"},       {true, {0, 1}, 0, "loop-type"}};
  return v;
}

std::map<std::string, int> terminus_multiset(const StokesDiagram& d) {
  std::map<std::string, int> m;
  for (const auto& c : d.curves) ++m[c.terminus];
  return m;
}

std::string multiset_str(const std::map<std::string, int>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : m) {
    os << (first ? "" : ", ") << k << " x" << n;
    first = false;
  }
  return os.str();
}

std::vector<CheckResult> geometry_suite() {
  Runner run("geometry");
  for (const auto& f : diagram_cases()) {
    const std::string name = f.d7 ? "D7 diagram c=" + short_complex(f.a) : "diagram " + label(Parameters{f.a, f.b});
    run.run(name, 5, [&] {
      const QuadDiff qd = f.d7 ? QuadDiff::d7(D7Parameters::make(f.a)) : QuadDiff::d6(Parameters::make(f.a, f.b));
      const StokesDiagram d = trace_diagram(qd);
      const size_t expected = f.d7 ? 6 : 16;
      int bad = d.curves.size() == expected ? 0 : 1;
      for (const auto& c : d.curves)
        if (c.terminus == "trace_error" || c.terminus == "arc_budget" || c.im_defect > 1e-6 * (1 + c.arc_length)) ++bad;
      std::string detail = d.summary() + "; " + std::to_string(d.curves.size()) + " curves; " +
                           multiset_str(terminus_multiset(d));
      if (d.summary() != f.verdict) {
        ++bad;
        detail += "; expected " + std::string(f.verdict);
      }
      // a non-degenerate picture keeps its terminus multiset under a small perturbation
      if (std::string(f.verdict) == "no degeneration") {
        const QuadDiff qp = f.d7 ? QuadDiff::d7(D7Parameters::make(f.a + cplx(1e-6, 1e-6)))
                                 : QuadDiff::d6(Parameters::make(f.a + cplx(1e-6, 1e-6), f.b));
        if (terminus_multiset(trace_diagram(qp)) != terminus_multiset(d)) {
          ++bad;
          detail += "; terminus multiset unstable";
        }
      }
      return Outcome{double(bad), 0, detail};
    });
  }

  run.run("exchange of c_inf and c_0 swaps the double-pole termini", 5, [] {
    int bad = 0;
    for (auto [a, b] : std::vector<std::pair<cplx, cplx>>{{{2, 1}, 3}, {1.9, {2, -1}}, {{1, 1}, {3, 0.5}}}) {
      auto m1 = terminus_multiset(trace_diagram(QuadDiff::d6(Parameters::make(a, b))));
      auto m2 = terminus_multiset(trace_diagram(QuadDiff::d6(Parameters::make(b, a))));
      std::swap(m2["double_pole:c_inf"], m2["double_pole:c_0"]);
      std::erase_if(m1, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(m2, [](const auto& kv) { return kv.second == 0; });
      if (m1 != m2) ++bad;
    }
    return Outcome{double(bad), 0, "3 generic parameters"};
  });

  const std::vector<std::pair<Parameters, std::string>> placements{
      {{2.0, {2.0, -1.0}}, "W2"},    {{{0, 1}, {3, 0.5}}, "W3"},   {{{-2, 1}, {2, 0.5}}, "W4"},
      {{{-3, 1}, {0, 0.5}}, "W5"},   {{{2, 1}, {2, 0.5}}, "W2"},   {{{-2, 1}, {-2, 0.5}}, "W6"},
      {{{0, 3}, {1, -2}}, "W3"},     {{{5, 1}, {0, 2}}, "W1"},     {{{0, 1}, {0, 0.5}}, "origin"},
      {{{1, 1}, {3, 0.5}}, "II"},    {{{-1, 1}, {3, 0.5}}, "III"}, {{{-3, 1}, {1, 0.5}}, "IV"},
      {{{-3, 1}, {-1, 0.5}}, "V"},   {{{0, 1}, {-3, 0.5}}, "W7"},  {{{2, 1}, {-2, 0.5}}, "W8"}};
  run.run("wall and chamber placements", 9, [&] {
    int bad = 0;
    std::string detail;
    for (const auto& [p, want] : placements) {
      const std::string got = classify(p).label();
      if (got != want) {
        ++bad;
        detail += label(p) + " -> " + got + " (expected " + want + "); ";
      }
    }
    return Outcome{double(bad), 0, detail.empty() ? std::to_string(placements.size()) + " parameters" : detail};
  });
  run.run("jumping coefficients match Borel summability on the walls", 9, [&] {
    int bad = 0;
    for (const auto& [p, want] : placements) {
      const auto s = classify(p);
      if (s.kind == Stratum::Kind::Chamber) continue;
      const auto r = summability_report(p);
      std::vector<Coefficient> off;
      if (!r.F_cp) off.push_back(Coefficient::F_cp);
      if (!r.F_cm) off.push_back(Coefficient::F_cm);
      if (!r.G_cinf) off.push_back(Coefficient::G_cinf);
      if (!r.G_c0) off.push_back(Coefficient::G_c0);
      auto j = jumping_coefficients(s);
      std::sort(j.begin(), j.end());
      if (j != off) ++bad;
    }
    return Outcome{double(bad), 0, "walls and origin"};
  });
  return run.take();
}

// ---- asymptotics

struct SampleSet {
  std::vector<AsymptoticSample> printed, corrected;
};

// 4 parameters, both signs of R_{-1}, eta in {1, 5} (at least 10/min|c| at the double poles),
// |t| in {1e3, 1e4} at infinity and {1e-4, 1e-5} at the double poles.
SampleSet collect_asymptotic_samples() {
  const std::vector<Parameters> ps{{{2, 1}, {3, 0}}, {{1.3, -0.4}, {-0.7, 0.9}}, {{-2.1, 0.3}, {0.8, -1.7}},
                                   {{0.5, 1}, {-0.3, 0.6}}};
  const double arg_t = 0.37;
  SampleSet out;
  for (const auto& p : ps) {
    const double eta_zero = 10.0 / std::min(std::abs(p.c_inf), std::abs(p.c_0));
    for (int sign : {1, -1})
      for (double eta : {1.0, 5.0})
        for (auto [ti, tz] : {std::pair{1e3, 1e-4}, std::pair{1e4, 1e-5}})
          for (bool corrected : {false, true}) {
            auto& dst = corrected ? out.corrected : out.printed;
            for (const auto& s : asymptotic_samples(p, ti, tz, arg_t, eta, sign, corrected))
              if (at_infinity(s.sheet)) dst.push_back(s);
            for (const auto& s : asymptotic_samples(p, ti, tz, arg_t, std::max(eta, eta_zero), sign, corrected))
              if (!at_infinity(s.sheet)) dst.push_back(s);
          }
  }
  return out;
}

std::string describe(const AsymptoticSample& s) {
  std::ostringstream os;
  os << to_string(s.sheet) << " " << s.quantity << (s.sign > 0 ? " (+)" : " (-)") << " at |t| = " << std::abs(s.t);
  return os.str();
}

std::vector<CheckResult> asymptotics_suite() {
  Runner run("asymptotics");
  SampleSet set;
  run.run("asymptotic samples", 0, [&] {
    set = collect_asymptotic_samples();
    return Outcome{0, 0, std::to_string(set.printed.size()) + " samples per variant"};
  });

  for (Sheet sheet : {Sheet::Inf1, Sheet::Inf2, Sheet::Inf3, Sheet::Inf4, Sheet::ZeroCInf, Sheet::ZeroC0}) {
    run.run("printed expansions on " + to_string(sheet), 8, [&] {
      double worst = 0, measured = 0, tol = 1;
      std::string detail = "no samples";
      for (const auto& s : set.printed) {
        if (s.sheet != sheet) continue;
        const double t = asymptotic_tolerance(s);
        if (detail == "no samples" || s.rel_err / t > worst) {
          worst = s.rel_err / t;
          measured = s.rel_err;
          tol = t;
          detail = "worst " + describe(s);
        }
      }
      if (detail == "no samples") measured = 1, tol = 0;
      return Outcome{measured, tol, detail};
    });
    run.run("tail test of the corrected expansions on " + to_string(sheet), 0, [&] {
      double worst = 0, measured = 0, tol = 1;
      std::string detail = "no samples";
      for (const auto& s : set.corrected) {
        if (s.sheet != sheet) continue;
        const double t = asymptotic_tail_tolerance(s);
        if (detail == "no samples" || s.tail_ratio / t > worst) {
          worst = s.tail_ratio / t;
          measured = s.tail_ratio;
          tol = t;
          detail = "worst " + describe(s);
        }
      }
      if (detail == "no samples") measured = 1, tol = 0;
      return Outcome{measured, tol, detail};
    });
  }

  run.run("printed coefficients that fail the tail test", 0, [&] {
    // informational: the printed terms inconsistent with the equation
    std::map<std::string, int> failing;
    for (const auto& s : set.printed)
      if (s.tail_ratio > asymptotic_tail_tolerance(s)) ++failing[to_string(s.sheet) + " " + s.quantity];
    std::string detail;
    for (const auto& [k, n] : failing) detail += (detail.empty() ? "" : ", ") + k + " x" + std::to_string(n);
    return Outcome{0, 0, detail.empty() ? "none" : detail};
  });

  run.run("homogeneity of degree table", 8, [] {
    // (t, c, eta) -> (t/r^2, c/r, r eta) multiplies each quantity by r^degree
    const Parameters p{{1.3, -0.4}, {-0.7, 0.9}};
    const double eta = 3.0;
    double worst = 0;
    std::string detail = "";
    auto note = [&](const std::string& what, cplx scaled, cplx base, double r, int degree) {
      const double e = rel(scaled, std::pow(r, degree) * base);
      if (e >= worst) {
        worst = e;
        detail = "worst " + what;
      }
    };
    for (double r : {2.0, 0.5}) {
      const Parameters ps = p.scaled(r);
      for (const auto& b : regular_points(p, 3)) {
        BranchPoint bs{b.t / (r * r), b.lambda0 / r, Sheet::Generic, 1};
        if (std::abs(r_minus1(bs, ps) - r * r_minus1(b, p)) > std::abs(r_minus1(bs, ps) + r * r_minus1(b, p)))
          bs.sign = -1;
        cplx root = lambda0_branches(bs.t, ps)[0].lambda0;
        for (const auto& c : lambda0_branches(bs.t, ps))
          if (std::abs(c.lambda0 - bs.lambda0) < std::abs(root - bs.lambda0)) root = c.lambda0;
        note("lambda0", root, b.lambda0, r, -1);
        note("mu0", mu0(bs, ps), mu0(b, p), r, 0);
        note("Delta", delta(bs, ps), delta(b, p), r, 2);
        const auto zp = zero_param_solution(b, p, 8, 10), zs = zero_param_solution(bs, ps, 8, 10);
        const auto rp = riccati_pair(zp, r_minus1(b, p)), rs = riccati_pair(zs, r_minus1(bs, ps));
        note("lambda", eval_series(zs.lambda, r * eta), eval_series(zp.lambda, eta), r, -1);
        note("mu", eval_series(zs.mu, r * eta), eval_series(zp.mu, eta), r, 0);
        note("R", eval_series(rs.plus, r * eta), eval_series(rp.plus, eta), r, 2);
        note("R_odd", eval_series(r_odd(rs), r * eta), eval_series(r_odd(rp), eta), r, 2);
        note("phi", phi_primitive(bs, ps), phi_primitive(b, p), r, -1);
      }
      const auto tp = turning_points(p), tps = turning_points(ps);
      for (cplx tau : tp.t) {
        double best = 1e300;
        for (cplx s : tps.t) best = std::min(best, rel(s, tau / (r * r)));
        if (best >= worst) {
          worst = best;
          detail = "worst tau";
        }
      }
      for (const char* s : {"d6:inf1:+", "d6:inf3:+", "d6:zero_cinf:+", "d6:zero_c0:+"}) {
        // sum_n w_n eta^{1-2n} is invariant
        const auto spec = EndpointSpec::parse(s);
        const auto a = voros_closed_form(spec, p, 4), b = voros_closed_form(spec, ps, 4);
        cplx wa = 0, wb = 0;
        for (int n = 1; n <= 4; ++n) {
          wa += a.coefficient(n) * std::pow(eta, 1 - 2 * n);
          wb += b.coefficient(n) * std::pow(r * eta, 1 - 2 * n);
        }
        note(std::string("W ") + s, wb, wa, r, 0);
      }
    }
    return Outcome{worst, 1e-10, detail};
  });
  return run.take();
}

}  // namespace

std::vector<std::string> suite_names() { return {"series", "voros", "borel", "geometry", "asymptotics"}; }

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "series") return series_suite();
  if (suite == "voros") return voros_suite();
  if (suite == "borel") return borel_suite();
  if (suite == "geometry") return geometry_suite();
  if (suite == "asymptotics") return asymptotics_suite();
  throw DomainError("unknown suite '" + suite + "' (expected all, series, voros, borel, geometry or asymptotics)");
}

}  // namespace p3wkb
