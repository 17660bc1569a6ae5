#include "p3wkb/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "p3wkb/errors.hpp"

namespace p3wkb {

double to_double(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

// Akiyama-Tanigawa: B_n with the B_1 = +1/2 convention, which is irrelevant for even n.
Rational bernoulli(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("bernoulli: index must be even and >= 2");
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

cplx poly_eval(const std::vector<cplx>& coeffs, cplx x) {
  cplx r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

cplx poly_deriv_eval(const std::vector<cplx>& c, cplx x) {
  cplx r = 0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) r = r * x + double(k) * c[k];
  return r;
}

}  // namespace

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  if (coeffs.size() < 2) throw DomainError("poly_roots: degree must be at least 1");
  if (coeffs.back() == cplx(0)) throw DomainError("poly_roots: leading coefficient is zero");
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 1) return {-coeffs[0] / coeffs[1]};

  // Solve for y = x / s with s a root-size bound, so the companion matrix is O(1).
  double s = 0;
  for (int k = 0; k < d; ++k)
    s = std::max(s, std::pow(std::abs(coeffs[k] / coeffs[d]), 1.0 / (d - k)));
  if (!(s > 0)) s = 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -coeffs[i] / coeffs[d] / std::pow(s, d - i);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = s * es.eigenvalues()[i];

  // Newton polish; a step is kept only if it lowers |p|, so clustered roots
  // are never pushed onto each other.
  for (auto& r : roots) {
    double res = std::abs(poly_eval(coeffs, r));
    for (int it = 0; it < 8 && res > 0; ++it) {
      cplx dp = poly_deriv_eval(coeffs, r);
      if (dp == cplx(0)) break;
      cplx cand = r - poly_eval(coeffs, r) / dp;
      double cres = std::abs(poly_eval(coeffs, cand));
      if (!(cres < res)) break;
      r = cand;
      res = cres;
    }
  }
  return roots;
}

namespace {

const std::array<double, 12>& stirling_coeffs() {
  static const std::array<double, 12> c = [] {
    std::array<double, 12> out{};
    for (int k = 1; k <= 12; ++k)
      out[k - 1] = to_double(bernoulli(2 * k) / Rational(2 * k * (2 * k - 1)));
    return out;
  }();
  return c;
}

cplx stirling(cplx z) {
  const auto& c = stirling_coeffs();
  cplx zinv = 1.0 / z, zinv2 = zinv * zinv, term = zinv, sum = 0;
  for (double ck : c) {
    sum += ck * term;
    term *= zinv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * std::numbers::pi) + sum;
}

}  // namespace

// Upward recurrence to Re z >= 15 followed by Stirling. Summing principal logs
// of z+k keeps the branch continuous off the negative axis, so no reflection
// branch correction is needed.
cplx log_gamma(cplx z) {
  if (z.real() <= 0.5 && std::abs(z.imag()) < 1e-14) {
    double r = std::round(z.real());
    if (r <= 0 && std::abs(z.real() - r) < 1e-14) throw DomainError("log_gamma: pole of Gamma");
  }
  constexpr double shift_to = 15.0;
  if (z.real() >= shift_to || (z.real() >= 0 && std::abs(z.imag()) >= shift_to)) return stirling(z);
  const int n = static_cast<int>(std::ceil(shift_to - z.real()));
  cplx acc = 0;
  for (int k = 0; k < n; ++k) acc += std::log(z + double(k));
  return stirling(z + double(n)) - acc;
}

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty complex literal");
  auto to_num = [&](const std::string& part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw DomainError("bad complex literal: " + text);
    }
    if (used != part.size()) throw DomainError("bad complex literal: " + text);
    return v;
  };
  char last = s.back();
  if (last != 'i' && last != 'j') return {to_num(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, to_num(s)};
  return {to_num(s.substr(0, split)), to_num(s.substr(split))};
}

std::string format_complex(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace p3wkb
