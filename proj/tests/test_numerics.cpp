#include <cmath>
#include <numbers>

#include "doctest.h"
#include "p3wkb/errors.hpp"
#include "p3wkb/jet.hpp"
#include "p3wkb/laurent.hpp"
#include "p3wkb/numerics.hpp"
#include "support.hpp"

using namespace p3wkb;
using testing::Gen;
using testing::rel_err;

namespace {

// Taylor coefficients of w/(e^w - 1) by exact inversion of (e^w - 1)/w.
std::vector<Rational> bernoulli_generating_coeffs(int n) {
  std::vector<Rational> a(n + 1), inv(n + 1);
  Rational fact(1);
  for (int k = 0; k <= n; ++k) {
    fact *= Rational(k + 1);
    a[k] = Rational(1) / fact;  // 1/(k+1)!
  }
  inv[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational s(0);
    for (int j = 1; j <= k; ++j) s += a[j] * inv[k - j];
    inv[k] = -s;
  }
  return inv;
}

Jet random_jet(Gen& g, cplx base, int K) {
  std::vector<cplx> c(K + 1);
  for (auto& x : c) x = g.in_box(1.0);
  c[0] += 2.0;
  return Jet(base, c);
}

void check_jets_close(const Jet& a, const Jet& b, double tol) {
  REQUIRE(a.order() == b.order());
  double scale = std::max(1.0, std::max(a.max_abs(), b.max_abs()));
  for (int k = 0; k <= a.order(); ++k) CHECK(std::abs(a[k] - b[k]) <= tol * scale);
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("bernoulli small values") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
  }

  TEST_CASE("bernoulli matches the generating function through n = 40") {
    const auto coeffs = bernoulli_generating_coeffs(40);
    Rational fact(1);
    for (int n = 1; n <= 40; ++n) {
      fact *= Rational(n);
      if (n % 2 == 0) CHECK(bernoulli(n) == coeffs[n] * fact);
    }
    CHECK(coeffs[1] == Rational(-1, 2));
  }

  TEST_CASE("bernoulli rejects odd and small indices") {
    CHECK_THROWS_AS(bernoulli(3), DomainError);
    CHECK_THROWS_AS(bernoulli(0), DomainError);
    CHECK_THROWS_AS(bernoulli(-2), DomainError);
  }

  TEST_CASE("poly_roots on constructed polynomials") {
    auto r = poly_roots({-1.0, 0.0, 0.0, 0.0, 1.0});
    REQUIRE(r.size() == 4);
    for (cplx target : {cplx(1), cplx(-1), I, -I}) {
      double best = 1e9;
      for (auto x : r) best = std::min(best, std::abs(x - target));
      CHECK(best < 1e-13);
    }
    // (x-2)^2 (x-3)(x+1) = x^4 - 6x^3 + 9x^2 + 4x - 12
    auto d = poly_roots({-12.0, 4.0, 9.0, -6.0, 1.0});
    int twos = 0, threes = 0, minus_ones = 0;
    for (auto x : d) {
      if (std::abs(x - 2.0) < 1e-6) ++twos;
      if (std::abs(x - 3.0) < 1e-12) ++threes;
      if (std::abs(x + 1.0) < 1e-12) ++minus_ones;
    }
    CHECK(twos == 2);
    CHECK(threes == 1);
    CHECK(minus_ones == 1);
  }

  TEST_CASE("poly_roots residual on the quartic at t = 1") {
    const cplx ci = 2.0, c0 = {2.0, -1.0}, t = 1.0;
    std::vector<cplx> q{-t * t, c0 * t, 0.0, -ci, 1.0};
    for (auto x : poly_roots(q)) CHECK(std::abs(poly_eval(q, x)) < 1e-12);
  }

  TEST_CASE("poly_roots satisfies Vieta for random quartics") {
    Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<cplx> a(5);
      for (auto& x : a) x = g.annulus(0.1, 10.0);
      auto r = poly_roots(a);
      cplx s = 0, p = 1;
      double mag = 0;
      for (auto x : r) s += x, p *= x, mag += std::abs(x);
      // Relative to the root magnitudes, since the sum itself may nearly cancel.
      CHECK(std::abs(s + a[3] / a[4]) < 1e-12 * mag);
      CHECK(rel_err(p, a[0] / a[4]) < 1e-12);
    }
  }

  TEST_CASE("poly_roots errors") {
    CHECK_THROWS_AS(poly_roots({1.0}), DomainError);
    CHECK_THROWS_AS(poly_roots({1.0, 2.0, 0.0}), DomainError);
  }

  TEST_CASE("log_gamma special values") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma(2.0)) < 1e-14);
    CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(std::numbers::pi)) < 1e-14);
    for (double x : {0.1, 0.7, 3.3, 17.5, 250.0, 9999.0})
      CHECK(std::abs(log_gamma(x) - std::lgamma(x)) < 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    // Gamma(-1/2) = -2 sqrt(pi): the real part is log 2 sqrt(pi), the branch is continuous off (-inf, 0].
    CHECK(std::abs(log_gamma(-0.5).real() - std::log(2 * std::sqrt(std::numbers::pi))) < 1e-13);
  }

  TEST_CASE("log_gamma obeys the duplication formula") {
    Gen g(5);
    for (int k = 0; k < 100; ++k) {
      cplx z = g.annulus(0.1, 1e3);
      if (z.real() < 0.2) z = cplx(std::abs(z.real()) + 0.2, z.imag());
      cplx d = log_gamma(2.0 * z) - log_gamma(z) - log_gamma(z + 0.5) - (2.0 * z - 1.0) * std::log(2.0) +
               0.5 * std::log(std::numbers::pi);
      // Equal modulo 2 pi i; the principal branches agree exactly in the right half plane.
      CHECK(std::abs(d) < 1e-11 * std::max(1.0, std::abs(z * std::log(z))));
    }
  }

  TEST_CASE("log_gamma recurrence and reflection on sampled points") {
    Gen g(6);
    for (int k = 0; k < 100; ++k) {
      cplx z = g.annulus(0.1, 1e4);
      if (std::abs(z.imag()) < 1e-3) continue;
      cplx d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
      d -= 2.0 * std::numbers::pi * I * std::round(d.imag() / (2 * std::numbers::pi));
      CHECK(std::abs(d) < 1e-12 * std::max(1.0, std::abs(z)));
      // Gamma(z) Gamma(1-z) = pi / sin(pi z), compared through exponentials at moderate |z|.
      if (std::abs(z) < 30 && std::abs(z.imag()) < 20) {
        cplx lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
        cplx rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
        CHECK(rel_err(lhs, rhs) < 1e-10);
      }
    }
  }

  TEST_CASE("log_gamma is continuous across the positive real axis and real there") {
    for (double x : {0.3, 2.0, 40.0}) {
      cplx a = log_gamma(cplx(x, 1e-9)), b = log_gamma(cplx(x, -1e-9));
      CHECK(std::abs(a - b) < 1e-7);
      CHECK(std::abs(log_gamma(cplx(x, 0)).imag()) == 0.0);
    }
  }

  TEST_CASE("log_gamma rejects poles") {
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-3.0), DomainError);
  }

  TEST_CASE("complex parsing and formatting") {
    CHECK(parse_complex("2+1i") == cplx(2, 1));
    CHECK(parse_complex("2-1i") == cplx(2, -1));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("i") == cplx(0, 1));
    CHECK(parse_complex("3") == cplx(3, 0));
    CHECK(parse_complex("0.5i") == cplx(0, 0.5));
    CHECK(parse_complex("1e-3-2.5e1i") == cplx(1e-3, -25));
    CHECK_THROWS_AS(parse_complex("2+"), DomainError);
    CHECK_THROWS_AS(parse_complex("abc"), DomainError);
    cplx z(0.1, -1.0 / 3.0);
    CHECK(parse_complex(format_complex(z)) == z);
  }

  TEST_CASE("jet basics") {
    const int K = 8;
    Jet s = Jet::variable(0.0, K);
    Jet one_plus_s = 1.0 + s;
    Jet r = sqrt(one_plus_s);
    check_jets_close(r * r, one_plus_s, 1e-15);

    Jet d = derive(s * s);
    CHECK(d.order() == K - 1);
    CHECK(std::abs(d[0]) < 1e-15);
    CHECK(std::abs(d[1] - 2.0) < 1e-15);
    for (int k = 2; k < K; ++k) CHECK(std::abs(d[k]) < 1e-15);

    Jet e = exp(s);
    Jet inv = 1.0 / e;
    double fact = 1;
    for (int k = 0; k <= K; ++k) {
      if (k > 0) fact *= k;
      CHECK(std::abs(inv[k] - (k % 2 ? -1.0 : 1.0) / fact) < 1e-15);
    }
    check_jets_close(log(e), s, 1e-15);
    check_jets_close(pow(one_plus_s, 3), one_plus_s * one_plus_s * one_plus_s, 1e-15);
  }

  TEST_CASE("jet singular operations") {
    Jet s = Jet::variable(0.0, 4);
    CHECK_THROWS_AS(1.0 / s, SingularError);
    CHECK_THROWS_AS(sqrt(s), SingularError);
    CHECK_THROWS_AS(log(s), SingularError);
    CHECK_THROWS_AS(Jet::variable(0.0, 3) + Jet::variable(1.0, 3), Error);
  }

  TEST_CASE("jet ring axioms and Leibniz rule on random jets") {
    Gen g(3);
    const cplx base{0.3, -0.2};
    for (int trial = 0; trial < 50; ++trial) {
      Jet a = random_jet(g, base, 8), b = random_jet(g, base, 8), c = random_jet(g, base, 8);
      check_jets_close((a * b) * c, a * (b * c), 1e-14);
      check_jets_close(a * (b + c), a * b + a * c, 1e-14);
      check_jets_close(derive(a * b), derive(a) * b + a * derive(b), 1e-13);
      check_jets_close((a / b) * b, a, 1e-13);
      check_jets_close(exp(log(a)), a, 1e-13);
    }
  }

  TEST_CASE("jet evaluation matches the function it expands") {
    const cplx t0{1.5, 0.5};
    Jet t = Jet::variable(t0, 20);
    Jet f = log(t) * sqrt(t);
    const cplx s{0.05, -0.03};
    cplx exact = std::log(t0 + s) * std::sqrt(t0 + s);
    CHECK(rel_err(f.eval(s), exact) < 1e-14);
    CHECK(rel_err(f.derivative_at_base(1), 1.0 / std::sqrt(t0) + std::log(t0) / (2.0 * std::sqrt(t0))) < 1e-14);
  }

  TEST_CASE("laurent shift, product and logarithm") {
    // (z+1)^{-1} = z^{-1} - z^{-2} + z^{-3} - ...
    Laurent inv = laurent_monomial(Rational(1), -1, -8).shifted(Rational(1));
    for (int k = 1; k <= 8; ++k) CHECK(inv.coeff(-k) == Rational(k % 2 ? 1 : -1));
    // (z + 1) (z+1)^{-1} = 1 up to the truncation floor, which moves up by one.
    Laurent prod = laurent_linear(Rational(1), -8) * inv;
    CHECK(prod.floor() == -7);
    CHECK(prod.coeff(0) == Rational(1));
    for (int k = -7; k < 0; ++k) CHECK(prod.coeff(k) == Rational(0));
    Laurent lg = laurent_log1p(Rational(1, 2), -5);
    CHECK(lg.coeff(-1) == Rational(1, 2));
    CHECK(lg.coeff(-2) == Rational(-1, 8));
    CHECK(lg.coeff(-3) == Rational(1, 24));
    CHECK(binomial(-1, 3) == Rational(-1));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(-3, 2) == Rational(6));
    CHECK(first_mismatch(lg, lg, -5) == INT_MIN);
  }
}
