#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "doctest.h"
#include "p3wkb/algebra.hpp"
#include "p3wkb/errors.hpp"
#include "support.hpp"

using namespace p3wkb;
using testing::Gen;
using testing::rel_err;

namespace {

const Parameters kSample{{2.0, 1.0}, {3.0, 0.0}};

std::vector<Parameters> sample_parameters() {
  return {kSample, {{2.0, 0.0}, {2.0, -1.0}}, {{-1.0, 1.0}, {3.0, 0.5}}, {{0.3, -2.0}, {-1.2, 0.7}},
          {{5.0, 1.0}, {0.0, 2.0}}};
}

// Order of vanishing (positive) or pole (negative) of f at u0, from the slope of log|f|.
double local_order(const std::function<cplx(cplx)>& f, cplx u0) {
  double r1 = 1e-4, r2 = 1e-3, acc = 0;
  for (int k = 0; k < 8; ++k) {
    cplx e = std::polar(1.0, 0.3 + 2 * std::numbers::pi * k / 8);
    acc += (std::log(std::abs(f(u0 + r2 * e))) - std::log(std::abs(f(u0 + r1 * e)))) / std::log(r2 / r1);
  }
  return acc / 8;
}

const BranchPoint& pick(const std::array<BranchPoint, 4>& bs, Sheet s) {
  for (const auto& b : bs)
    if (b.sheet == s) return b;
  FAIL("sheet not found: " << to_string(s));
  return bs[0];
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("genericity gate") {
    CHECK(kSample.generic());
    CHECK_THROWS_AS(Parameters::make(0.0, 1.0), DegenerateError);
    CHECK_THROWS_AS(Parameters::make(1.0, 0.0), DegenerateError);
    CHECK_THROWS_AS(Parameters::make(2.0, -2.0), DegenerateError);
    CHECK_THROWS_AS(Parameters::make(1.0, I), DegenerateError);
    CHECK(Parameters{1.0, 1.0 + 1e-13}.genericity_violation() == "c_inf^2 - c_0^2 = 0");
    CHECK_NOTHROW(Parameters::make(1.0, 1.0 + 1e-6));
    CHECK(kSample.c_p() == cplx(2.5, 0.5));
    CHECK(kSample.c_m() == cplx(-0.5, 0.5));
  }

  TEST_CASE("lambda0 branches: residual and Vieta") {
    Gen g(1);
    for (const auto& p : sample_parameters()) {
      for (int k = 0; k < 20; ++k) {
        cplx t = g.annulus(0.05, 50.0);
        auto bs = lambda0_branches(t, p);
        cplx s = 0, prod = 1;
        for (const auto& b : bs) {
          CHECK(std::abs(quartic(b.lambda0, t, p)) < 1e-12 * std::max(1.0, std::norm(t)));
          s += b.lambda0;
          prod *= b.lambda0;
        }
        CHECK(std::abs(s - p.c_inf) < 1e-11 * std::max(1.0, std::sqrt(std::abs(t))));
        CHECK(rel_err(prod, -t * t) < 1e-11);
      }
    }
    CHECK_THROWS_AS(lambda0_branches(0.0, kSample), SingularError);
  }

  TEST_CASE("at large t the roots cluster at +-sqrt(t), +-i sqrt(t)") {
    const cplx t = std::polar(1e6, 0.4);
    auto bs = lambda0_branches(t, kSample);
    for (cplx target : {cplx(1), cplx(-1), I, -I}) {
      double best = 1e9;
      for (const auto& b : bs) best = std::min(best, std::abs(b.lambda0 / std::sqrt(t) - target));
      CHECK(best < 1e-2);
    }
    std::set<Sheet> seen;
    for (const auto& b : bs) seen.insert(b.sheet);
    CHECK(seen.size() == 4);
  }

  TEST_CASE("the three behaviours at t -> 0") {
    for (const auto& p : sample_parameters()) {
      const cplx t = std::polar(1e-7 * p.scale() * p.scale(), 0.9);
      auto bs = lambda0_branches(t, p);
      int to_cinf = 0, linear = 0, root = 0;
      const cplx s = std::sqrt(p.c_0 / p.c_inf * t);
      for (const auto& b : bs) {
        if (rel_err(b.lambda0, p.c_inf) < 1e-5) ++to_cinf;
        if (rel_err(b.lambda0, t / p.c_0) < 1e-5) ++linear;
        if (rel_err(b.lambda0, s) < 1e-2 || rel_err(b.lambda0, -s) < 1e-2) ++root;
      }
      CHECK(to_cinf == 1);
      CHECK(linear == 1);
      CHECK(root == 2);
      CHECK(rel_err(pick(bs, Sheet::ZeroC0).lambda0, t / p.c_0) < 1e-5);
    }
  }

  TEST_CASE("Delta near the double pole 0_cinf: t^2 Delta -> c_inf^2") {
    const cplx t = std::polar(1e-6, 0.2);
    auto b = pick(lambda0_branches(t, kSample), Sheet::ZeroCInf);
    CHECK(rel_err(t * t * delta(b, kSample), kSample.c_inf * kSample.c_inf) < 1e-5);
    b.sign = 1;
    CHECK(rel_err(r_minus1(b, kSample) * t, kSample.c_inf) < 1e-5);
    b.sign = -1;
    CHECK(rel_err(r_minus1(b, kSample) * t, -kSample.c_inf) < 1e-5);
  }

  TEST_CASE("mu0 on the branches at infinity") {
    const cplx t = std::polar(1e8, -0.3);
    auto bs = lambda0_branches(t, kSample);
    CHECK(std::abs(mu0(pick(bs, Sheet::Inf3), kSample) - 1.0) < 1e-3);
    CHECK(std::abs(mu0(pick(bs, Sheet::Inf4), kSample) - 1.0) < 1e-3);
    const cplx expect = kSample.c_p() / 2.0 / std::sqrt(t);
    CHECK(rel_err(mu0(pick(bs, Sheet::Inf1), kSample), expect) < 1e-3);
  }

  TEST_CASE("turning points: cubic, discriminant and double roots") {
    for (const auto& p : sample_parameters()) {
      auto cub = turning_cubic(p);
      const cplx a2 = p.c_inf * p.c_inf, b2 = p.c_0 * p.c_0;
      const cplx expect = -20155392.0 * std::pow(a2 - b2, 4) * (a2 + b2) * (a2 + b2);
      CHECK(rel_err(cubic_discriminant(cub), expect) < 1e-10);

      auto tp = turning_points(p);
      for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(poly_eval({cub[0], cub[1], cub[2], cub[3]}, tp.t[k])) <
              1e-10 * std::pow(p.scale(), 6) * std::max(1.0, std::pow(std::abs(tp.t[k]), 3)));
        auto bs = lambda0_branches(tp.t[k], p);
        double md = 1e9;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) md = std::min(md, std::abs(bs[i].lambda0 - bs[j].lambda0));
        CHECK(md < 1e-5 * p.scale());
        // The paired lambda0 is the double root.
        CHECK(std::abs(quartic(tp.lambda0[k], tp.t[k], p)) < 1e-10 * std::pow(p.scale(), 4));
        CHECK(std::abs(rhs_dF(tp.lambda0[k], tp.t[k], p)) * std::norm(tp.t[k]) < 1e-9 * std::pow(p.scale(), 6));
        // Delta vanishes like (t - tau)^{1/2}: shrinking the distance 100x shrinks min |Delta| 10x.
        auto min_delta = [&](double dist) {
          double dmin = 1e300;
          for (const auto& b : lambda0_branches(tp.t[k] + dist * p.scale() * p.scale(), p))
            dmin = std::min(dmin, std::abs(delta(b, p)) * p.scale() * p.scale());
          return dmin;
        };
        const double d4 = min_delta(1e-4), d6 = min_delta(1e-6);
        CHECK(d6 < d4);
        CHECK(std::abs(d4 / d6 - 10.0) < 0.5);
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(std::abs(tp.t[i] - tp.t[j]) > 1e-6);
    }
    CHECK_THROWS_AS(turning_points(Parameters{1.0, -1.0}), DegenerateError);
  }

  TEST_CASE("u-chart: quartic, round trip and chain rule") {
    Gen g(2);
    for (const auto& p : sample_parameters()) {
      const UChart ch{p};
      for (int k = 0; k < 20; ++k) {
        cplx u = g.annulus(0.2, 3.0);
        cplx t = ch.t_of_u(u), l = ch.lambda0_of_u(u);
        CHECK(std::abs(quartic(l, t, p)) < 1e-11 * std::max(1.0, std::norm(t)) * std::pow(p.scale(), 4));
        BranchPoint b{t, l};
        CHECK(std::abs(ch.u_of_branch(b) - u) < 1e-9 * std::max(1.0, std::abs(u)));
        // q du^2 = Delta dt^2
        CHECK(rel_err(ch.q(u) / (ch.dt_du(u) * ch.dt_du(u)), delta(b, p)) < 1e-9);
        // dt/du against a central difference
        const double h = 1e-5;
        cplx fd = (ch.t_of_u(u + h) - ch.t_of_u(u - h)) / (2 * h);
        CHECK(rel_err(ch.dt_du(u), fd) < 1e-7);
      }
      // Round trip from a quartic root.
      for (const auto& b : lambda0_branches(cplx(0.7, 0.4) * p.scale() * p.scale(), p))
        CHECK(rel_err(ch.t_of_u(ch.u_of_branch(b)), b.t) < 1e-10);
    }
  }

  TEST_CASE("u-chart: special points") {
    for (const auto& p : sample_parameters()) {
      const UChart ch{p};
      const cplx r = p.c_m() / p.c_p();
      // Turning points are the cube roots of -r^2.
      auto us = ch.turning_points_u();
      const cplx omega = std::polar(1.0, 2 * std::numbers::pi / 3);
      const cplx base = std::pow(r, 2.0 / 3.0) * std::polar(1.0, std::numbers::pi / 3);
      for (int j = 0; j < 3; ++j) {
        cplx target = base * std::pow(omega, j);
        double best = 1e9;
        for (auto x : us) best = std::min(best, std::abs(x - target));
        CHECK(best < 1e-10 * std::max(1.0, std::abs(target)));
      }
      auto qf = [&](cplx u) { return ch.q(u); };
      for (auto x : us) CHECK(std::abs(local_order(qf, x) - 3.0) < 1e-2);
      CHECK(std::abs(local_order(qf, -1.0) + 1.0) < 1e-2);
      CHECK(std::abs(local_order(qf, r) + 2.0) < 1e-2);
      CHECK(std::abs(local_order(qf, -r) + 2.0) < 1e-2);
      CHECK(std::abs(local_order(qf, 0.0) + 4.0) < 1e-2);
      // q -> 4 c_p^2 as u -> infinity, an order-4 pole in the coordinate 1/u.
      CHECK(rel_err(ch.q(1e7), 4.0 * p.c_p() * p.c_p()) < 1e-5);
      CHECK(rel_err(ch.lambda0_of_u(r * (1.0 + 1e-9)), p.c_inf) < 1e-6);
      CHECK(std::abs(ch.lambda0_of_u(-r)) < 1e-12);
      CHECK_THROWS_AS(ch.q(-1.0), SingularError);
    }
  }

  TEST_CASE("residues of sqrt(q) du") {
    for (const auto& p : sample_parameters()) {
      auto rs = residues(p);
      REQUIRE(rs.size() == 4);
      std::map<std::string, cplx> expect{
          {"inf", p.c_p()}, {"0", p.c_m()}, {"double_c_inf", p.c_inf}, {"double_c_0", p.c_0}};
      for (const auto& r : rs) {
        CHECK(r.closed_form == expect[r.where]);
        CHECK(std::abs(r.numeric - r.closed_form) < 1e-8 * p.scale());
      }
    }
  }

  TEST_CASE("homogeneity of lambda0, mu0, Delta and turning points") {
    Gen g(4);
    for (double r : {2.0, 1.0 / 3.0}) {
      for (const auto& p : sample_parameters()) {
        const Parameters ps = p.scaled(r);
        const cplx t = g.annulus(0.3, 4.0);
        auto bs = lambda0_branches(t, p);
        auto bss = lambda0_branches(t / (r * r), ps);
        for (const auto& b : bs) {
          // Match the scaled root by degree -1.
          const BranchPoint* m = nullptr;
          for (const auto& c : bss)
            if (!m || std::abs(c.lambda0 - b.lambda0 / r) < std::abs(m->lambda0 - b.lambda0 / r)) m = &c;
          CHECK(rel_err(m->lambda0, b.lambda0 / r) < 1e-10);
          CHECK(rel_err(mu0(*m, ps), mu0(b, p)) < 1e-10);
          CHECK(rel_err(delta(*m, ps), r * r * delta(b, p)) < 1e-10);
        }
        auto tp = turning_points(p), tps = turning_points(ps);
        for (auto x : tp.t) {
          double best = 1e9;
          for (auto y : tps.t) best = std::min(best, rel_err(y, x / (r * r)));
          CHECK(best < 1e-10);
        }
      }
    }
  }

  TEST_CASE("D7 algebraic layer") {
    for (cplx c : {cplx(2, 1), cplx(0, 1), cplx(-0.5, 0.3)}) {
      const D7UChart ch{c};
      auto qf = [&](cplx u) { return ch.q(u); };
      CHECK(std::abs(local_order(qf, ch.turning_point_u()) - 3.0) < 1e-2);
      CHECK(std::abs(local_order(qf, 0.0) + 1.0) < 1e-2);
      CHECK(std::abs(local_order(qf, c) + 2.0) < 1e-2);
      Gen g(9);
      for (int k = 0; k < 10; ++k) {
        cplx u = g.annulus(0.2, 2.0);
        cplx t = ch.t_of_u(u), l = ch.lambda0_of_u(u);
        CHECK(std::abs(d7_cubic(l, t, c)) < 1e-11 * std::max(1.0, std::norm(t)));
        CHECK(std::abs(ch.u_of_lambda(t, l) - u) < 1e-9 * std::max(1.0, std::abs(u)));
        CHECK(rel_err(ch.q(u) / (ch.dt_du(u) * ch.dt_du(u)), d7_rhs_dF(l, t, c)) < 1e-9);
      }
      for (auto l : d7_lambda0_roots(cplx(0.3, 0.2), c)) CHECK(std::abs(d7_cubic(l, cplx(0.3, 0.2), c)) < 1e-12);
    }
    CHECK_THROWS_AS(D7Parameters::make(0.0), DegenerateError);
  }
}
