#include <cmath>

#include "doctest.h"
#include "p3wkb/algebra.hpp"
#include "p3wkb/errors.hpp"
#include "p3wkb/series.hpp"
#include "support.hpp"

using namespace p3wkb;
using testing::Gen;
using testing::rel_err;

namespace {

const Parameters kP{{2.0, 1.0}, {3.0, 0.0}};

struct Sample {
  Parameters p;
  BranchPoint b;
};

// Regular base points away from turning points, on random roots.
std::vector<Sample> regular_samples(int n, unsigned seed = 7) {
  Gen g(seed);
  std::vector<Sample> out;
  const std::vector<Parameters> ps{kP, {{2.0, 0.0}, {2.0, -1.0}}, {{-1.0, 1.0}, {3.0, 0.5}}, {{0.3, -2.0}, {-1.2, 0.7}}};
  while (static_cast<int>(out.size()) < n) {
    const Parameters& p = ps[out.size() % ps.size()];
    cplx t = g.annulus(0.5, 3.0) * p.scale() * p.scale();
    auto bs = lambda0_branches(t, p);
    const auto& b = bs[static_cast<int>(g.uniform(0, 3.999))];
    auto tp = turning_points(p);
    double dmin = 1e9;
    for (auto x : tp.t) dmin = std::min(dmin, std::abs(x - t));
    if (dmin < 0.3 * p.scale() * p.scale()) continue;
    out.push_back({p, b});
  }
  return out;
}

// Each jet coefficient of each term of `res` relative to the largest matching coefficient among `parts`.
double relative_residual(const EtaSeries& res, const std::vector<EtaSeries>& parts, int top, int bottom) {
  double worst = 0;
  for (int pw = top; pw >= bottom; --pw) {
    Jet r = res.coeff(pw);
    for (int k = 0; k <= r.order(); ++k) {
      double scale = 1e-300;
      for (const auto& s : parts)
        if (s.has_power(pw) || pw > s.offset()) {
          Jet c = s.coeff(pw);
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

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("eta-series arithmetic") {
    const cplx t0 = 1.3;
    Jet a = Jet::variable(t0, 4) + 2.0, b = 1.0 / (Jet::variable(t0, 4) + 1.0);
    EtaSeries s(1, {a, b, a * b});
    EtaSeries sq = s * s;
    CHECK(sq.offset() == 2);
    EtaSeries back = sq / s;
    for (int k = 0; k < 3; ++k) CHECK(max_rel_jet(back.term(k), s.term(k), 4) < 1e-14);
    EtaSeries e(2, {a * a, 2.0 * a * b, b * b});
    EtaSeries r = sqrt(e);
    CHECK(r.offset() == 1);
    CHECK(max_rel_jet(r.term(1), b, 4) < 1e-14);
    CHECK_THROWS_AS(sqrt(s), DomainError);
    CHECK(EtaSeries(1, {a, Jet(t0, 4), b}).parity() == "odd");
    CHECK_THROWS_AS(s.coeff(-5), OrderError);
  }

  TEST_CASE("zero-parameter solution: odd coefficients vanish exactly, equation residual vanishes") {
    for (const auto& smp : regular_samples(5)) {
      auto zp = zero_param_solution(smp.b, smp.p, 8, 12);
      for (int l = 1; l <= 8; l += 2) CHECK(zp.lambda.coeff(-l).max_abs() == 0.0);
      const auto& L = zp.lambda;
      const Jet t = Jet::variable(L.base(), L.min_jet_order()), t2 = t * t;
      const EtaSeries Lp = derive(L), Lpp = derive(Lp);
      EtaSeries res = equation_residual(zp.model, L);
      const EtaSeries L2 = L * L;
      std::vector<EtaSeries> parts{(L * Lpp) * t2, (Lp * Lp) * t2, (L * Lp) * t, (L2 * L2).times_eta_power(2),
                                   (L2 * L * smp.p.c_inf).times_eta_power(2), EtaSeries::from_jet(t2, 9).times_eta_power(2)};
      CHECK(relative_residual(res, parts, 2, -6) < 1e-9);
    }
  }

  TEST_CASE("printed lambda_2 and lambda_4") {
    for (const auto& smp : regular_samples(5, 8)) {
      const int K = 10;
      auto zp = zero_param_solution(smp.b, smp.p, 6, K);
      const Jet t = Jet::variable(smp.b.t, K);
      const Jet l0 = zp.lambda.term(0);
      const Jet d1 = derive(l0), d2 = derive(d1);
      const cplx ci = smp.p.c_inf;
      const Jet D = 3.0 * l0 * l0 / (t * t) - 2.0 * ci * l0 / (t * t) + 1.0 / (l0 * l0);
      const Jet l2 = (d2 - d1 * d1 / l0 + d1 / t) / D;
      CHECK(max_rel_jet(zp.lambda.coeff(-2), l2, 4) < 1e-10);
      const Jet e1 = derive(l2), e2 = derive(e1);
      const Jet l4 = (e2 - 2.0 / l0 * d1 * e1 + l2 / (l0 * l0) * d1 * d1 + e1 / t - 3.0 * l0 * l2 * l2 / (t * t) +
                      ci * l2 * l2 / (t * t) + l2 * l2 / (l0 * l0 * l0)) /
                     D;
      CHECK(max_rel_jet(zp.lambda.coeff(-4), l4, 2) < 1e-9);
    }
  }

  TEST_CASE("printed R_0 and R_1, Riccati residual") {
    for (const auto& smp : regular_samples(5, 9)) {
      const int N = 8, K = 12;
      auto zp = zero_param_solution(smp.b, smp.p, N, K);
      const cplx r1 = r_minus1(smp.b, smp.p);
      EtaSeries R = riccati_solution(zp, r1);
      CHECK(rel_err(R.coeff(1).value(), r1) < 1e-12);

      const Jet t = Jet::variable(smp.b.t, K);
      const Jet l0 = zp.lambda.term(0), l2 = zp.lambda.coeff(-2);
      const Jet d1 = derive(l0);
      const Jet Rm1 = R.coeff(1);
      const Jet R0p = -derive(Rm1) / (2.0 * Rm1) + d1 / l0 - 0.5 / t;
      CHECK(max_rel_jet(R.coeff(0), R0p, 4) < 1e-10);
      const cplx ci = smp.p.c_inf;
      const Jet g = d1 / l0;
      const Jet R1 = 1.0 / (2.0 * Rm1) *
                     (-R0p * R0p - derive(R0p) + (2.0 * g - 1.0 / t) * R0p +
                      (6.0 * l0 / (t * t) - 2.0 * ci / (t * t) - 2.0 / (l0 * l0 * l0)) * l2 - g * g);
      CHECK(max_rel_jet(R.coeff(-1), R1, 3) < 1e-10);

      EtaSeries res = riccati_residual(zp, R);
      const Jet tt = Jet::variable(smp.b.t, zp.jet_order);
      const EtaSeries Lp = derive(zp.lambda);
      std::vector<EtaSeries> parts{R * R, derive(R), (Lp / zp.lambda) * R,
                                   zp.model.dF(zp.lambda, tt).times_eta_power(2)};
      CHECK(relative_residual(res, parts, 2, 2 - N) < 1e-9);
    }
  }

  TEST_CASE("odd and even parts") {
    for (const auto& smp : regular_samples(4, 10)) {
      auto zp = zero_param_solution(smp.b, smp.p, 6, 10);
      const cplx r1 = r_minus1(smp.b, smp.p);
      auto pr = riccati_pair(zp, r1);
      // R_-(eta) = R_+(-eta)
      for (int pw = 1; pw >= -5; --pw) {
        Jet a = pr.minus.coeff(pw), b = pr.plus.coeff(pw);
        CHECK(max_rel_jet(a, (pw % 2 ? -1.0 : 1.0) * b, 2) < 1e-10);
      }
      EtaSeries ro = r_odd(pr), re = r_even(pr);
      CHECK(ro.parity() == "odd");
      CHECK(ro.coeff(0).max_abs() == 0.0);
      CHECK(rel_err(ro.coeff(1).value(), r1) < 1e-12);
      EtaSeries sum = ro + re;
      for (int pw = 1; pw >= -5; --pw) CHECK(max_rel_jet(sum.coeff(pw), pr.plus.coeff(pw), 2) < 1e-14);
      // Swapping the root flips the odd part and keeps the even part.
      auto flipped = riccati_pair(zp, -r1);
      EtaSeries ro2 = r_odd(flipped), re2 = r_even(flipped);
      for (int pw = 1; pw >= -5; --pw) {
        CHECK(max_rel_jet(ro2.coeff(pw), -1.0 * ro.coeff(pw), 2) < 1e-14);
        CHECK(max_rel_jet(re2.coeff(pw), re.coeff(pw), 2) < 1e-14);
      }
      // R_even = -(1/2) R_odd'/R_odd + lambda'/lambda - 1/(2t)
      const Jet t = Jet::variable(smp.b.t, zp.jet_order);
      EtaSeries rhs = -0.5 * (derive(ro) / ro) + derive(zp.lambda) / zp.lambda -
                      EtaSeries::from_jet(0.5 / t, zp.lambda.size());
      for (int pw = 0; pw >= -4; --pw) CHECK(max_rel_jet(re.coeff(pw), rhs.coeff(pw), 1) < 1e-9);

      auto pre = instanton1_prefactor(zp, ro);
      EtaSeries lhs = pre.series * pre.series * ((ro * t).times_eta_power(-1));
      EtaSeries l2 = zp.lambda * zp.lambda;
      for (int pw = 0; pw >= -4; --pw) CHECK(max_rel_jet(lhs.coeff(pw), l2.coeff(pw), 1) < 1e-9);
      CHECK(pre.half_eta_power == -1);
    }
  }

  TEST_CASE("Hamiltonian system and the X factor") {
    for (const auto& smp : regular_samples(4, 11)) {
      auto zp = zero_param_solution(smp.b, smp.p, 6, 10);
      auto hr = hamiltonian_residual(zp.model, zp.lambda, zp.mu);
      CHECK(series_max_abs(hr.dlambda.truncated(6)) < 1e-9 * std::max(1.0, series_max_abs(zp.lambda)));
      CHECK(series_max_abs(hr.dmu.truncated(6)) < 1e-9 * std::max(1.0, series_max_abs(zp.mu) * smp.p.scale()));

      // delta mu = X delta lambda solves the linearized system along with delta lambda = exp(int R).
      EtaSeries R = riccati_solution(zp, r_minus1(smp.b, smp.p));
      EtaSeries X = x_factor(zp, R);
      const Jet t = Jet::variable(smp.b.t, zp.jet_order), tinv = 1.0 / t;
      const EtaSeries& L = zp.lambda;
      const EtaSeries& M = zp.mu;
      const cplx c0 = smp.p.c_0;
      const EtaSeries c0m = EtaSeries::constant(c0, smp.b.t, zp.jet_order, L.size() + 1, -1.0);
      const EtaSeries one = EtaSeries::constant(1.0, smp.b.t, zp.jet_order, L.size() + 1);
      const EtaSeries Hll = (2.0 * M * M - 2.0 * M) * tinv;
      const EtaSeries Hlm = (4.0 * L * M - 2.0 * L - c0m) * tinv;
      const EtaSeries Hmm = 2.0 * (L * L) * tinv;
      EtaSeries first = R - (Hlm + Hmm * X).times_eta_power(1);
      EtaSeries second = derive(X) + X * R + (Hll + Hlm * X).times_eta_power(1);
      std::vector<EtaSeries> p1{R, (Hmm * X).times_eta_power(1)};
      std::vector<EtaSeries> p2{X * R, derive(X), (Hlm * X).times_eta_power(1), Hll.times_eta_power(1)};
      CHECK(relative_residual(first, p1, 1, -4) < 1e-9);
      CHECK(relative_residual(second, p2, 1, -4) < 1e-9);
    }
  }

  TEST_CASE("Backlund transformations") {
    for (const auto& smp : regular_samples(4, 12)) {
      auto zp = zero_param_solution(smp.b, smp.p, 6, 12);
      for (int j : {1, 2}) {
        auto tr = backlund_apply(j, zp);
        auto hr = hamiltonian_residual(tr.model, tr.lambda, tr.mu);
        const double sl = std::max(1.0, series_max_abs(tr.lambda)), sm = std::max(1.0, series_max_abs(tr.mu));
        CHECK(series_max_abs(hr.dlambda.truncated(5)) < 1e-9 * sl * smp.p.scale());
        CHECK(series_max_abs(hr.dmu.truncated(5)) < 1e-9 * sm * smp.p.scale());
        // Same as the zero-parameter solution recomputed at the shifted parameters.
        auto direct = zero_param_solution(tr.model, smp.b.t, tr.lambda.term(0).value(), 6, 12);
        for (int pw = 0; pw >= -4; --pw)
          CHECK(max_rel_jet(tr.lambda.coeff(pw), direct.lambda.coeff(pw), 2) < 1e-9);
        if (j == 2) CHECK(rel_err(tr.lambda.term(0).value(), smp.b.lambda0) < 1e-12);
      }
    }
  }

  TEST_CASE("homogeneity of series coefficients") {
    for (double r : {2.0, 0.5}) {
      for (const auto& smp : regular_samples(3, 13)) {
        const Parameters ps = smp.p.scaled(r);
        BranchPoint bs{smp.b.t / (r * r), smp.b.lambda0 / r};
        auto zp = zero_param_solution(smp.b, smp.p, 6, 10);
        auto zs = zero_param_solution(bs, ps, 6, 10);
        auto R = riccati_solution(zp, r_minus1(smp.b, smp.p));
        auto Rs = riccati_solution(zs, r * r * R.coeff(1).value());
        auto X = x_factor(zp, R), Xs = x_factor(zs, Rs);
        auto ro = r_odd(riccati_pair(zp, r_minus1(smp.b, smp.p)));
        auto ros = r_odd(riccati_pair(zs, r * r * R.coeff(1).value()));
        auto check = [&](const EtaSeries& a, const EtaSeries& as, int degree, int top, int bottom) {
          for (int pw = top; pw >= bottom; --pw) {
            Jet x = a.coeff(pw), y = as.coeff(pw);
            // coefficient of eta^pw: degree - pw; each t-derivative adds 2
            for (int k = 0; k <= std::min(2, std::min(x.order(), y.order())); ++k) {
              cplx expect = std::pow(r, degree - pw + 2 * k) * x[k];
              CHECK(std::abs(y[k] - expect) < 1e-10 * std::max(std::abs(expect), 1e-12));
            }
          }
        };
        check(zp.lambda, zs.lambda, -1, 0, -6);
        check(zp.mu, zs.mu, 0, 0, -6);
        check(R, Rs, 2, 1, -4);
        check(ro, ros, 2, 1, -4);
        check(X, Xs, 1, 0, -4);
      }
    }
  }

  TEST_CASE("independence of the base point") {
    auto smp = regular_samples(1, 14)[0];
    auto zp = zero_param_solution(smp.b, smp.p, 4, 14);
    const cplx h{0.01, 0.005};
    const cplx t1 = smp.b.t + h;
    const cplx l1 = zp.lambda.term(0).eval(h);
    auto z1 = zero_param_solution(SeriesModel::d6(smp.p), t1, l1, 4, 14);
    for (int pw = 0; pw >= -4; pw -= 2) {
      Jet a = zp.lambda.coeff(pw);
      CHECK(rel_err(a.eval(h), z1.lambda.coeff(pw).value()) < 1e-8);
    }
  }

  TEST_CASE("guards") {
    auto smp = regular_samples(1, 15)[0];
    CHECK_THROWS_AS(zero_param_solution(smp.b, smp.p, 6, 7), OrderError);
    auto tp = turning_points(smp.p);
    CHECK_THROWS_AS(zero_param_solution(SeriesModel::d6(smp.p), tp.t[0], tp.lambda0[0], 4, 8), SingularError);
    CHECK_THROWS_AS(zero_param_solution(SeriesModel::d6(smp.p), 0.0, 1.0, 4, 8), SingularError);
  }

  TEST_CASE("D7 series") {
    const cplx c{2.0, 1.0};
    const cplx t0{1.5, -0.7};
    for (cplx l : d7_lambda0_roots(t0, c)) {
      auto zp = zero_param_solution(SeriesModel::d7(c), t0, l, 6, 10);
      for (int k = 1; k <= 5; k += 2) CHECK(zp.lambda.coeff(-k).max_abs() == 0.0);
      EtaSeries res = equation_residual(zp.model, zp.lambda);
      CHECK(series_max_abs(res.truncated(7)) < 1e-9 * std::max(1.0, series_max_abs(zp.lambda * zp.lambda) * std::norm(t0)));
      cplx r1 = std::sqrt(d7_rhs_dF(l, t0, c));
      EtaSeries R = riccati_solution(zp, r1);
      EtaSeries rr = riccati_residual(zp, R);
      CHECK(series_max_abs(rr.truncated(6)) < 1e-9 * std::max(1.0, std::norm(r1)));
    }
  }
}
