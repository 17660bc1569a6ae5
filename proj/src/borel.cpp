#include "p3wkb/borel.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "p3wkb/errors.hpp"
#include "p3wkb/voros.hpp"

namespace p3wkb {

BorelKind parse_borel_kind(const std::string& text) {
  if (text == "F" || text == "f") return BorelKind::F;
  if (text == "G" || text == "g") return BorelKind::G;
  throw DomainError("unknown series kind '" + text + "' (expected F or G)");
}

Side parse_side(const std::string& text) {
  if (text == "+" || text == "plus") return Side::Plus;
  if (text == "-" || text == "minus") return Side::Minus;
  throw DomainError("unknown side '" + text + "' (expected + or -)");
}

std::string to_string(BorelKind k) { return k == BorelKind::F ? "F" : "G"; }
std::string to_string(Side s) { return s == Side::Plus ? "+" : "-"; }

namespace {

bool purely_imaginary(cplx z, double rel) { return std::abs(z.real()) <= rel * std::abs(z); }

void require_no_gamma_pole(cplx w) {
  const double n = std::round(w.real());
  if (n <= 0 && std::abs(w - cplx(n, 0)) < 1e-14 * std::max(1.0, std::abs(w)))
    throw DomainError("Borel sum: Gamma has a pole at " + format_complex(w));
}

}  // namespace

BorelSumValue borel_sum(BorelKind kind, cplx c, double eta, Side side) {
  if (!(eta > 0)) throw DomainError("Borel sum: eta must be positive");
  BorelSumValue out;
  out.kind = kind;
  out.side = side;
  out.z = c * eta;
  if (out.z == cplx(0)) throw DomainError("Borel sum: c must be nonzero");
  out.summable = !purely_imaginary(out.z, 1e-12);
  if (!out.summable) return out;

  const cplx z = out.z;
  const cplx log_2pi_half = 0.5 * std::log(2 * M_PI);
  const cplx common = -z * (std::log(z) - 1.0);
  cplx v;
  if (kind == BorelKind::F) {
    if (side == Side::Minus) {
      require_no_gamma_pole(z + 0.5);
      v = log_gamma(z + 0.5) - log_2pi_half + common;
    } else {
      require_no_gamma_pole(-z + 0.5);
      v = -(log_gamma(-z + 0.5) - log_2pi_half) + common + M_PI * I * z;
    }
  } else {
    if (side == Side::Minus) {
      require_no_gamma_pole(z);
      v = log_gamma(z) - log_2pi_half + common + 0.5 * std::log(z);
    } else {
      require_no_gamma_pole(-z);
      v = -(log_gamma(-z) - log_2pi_half) + common - 0.5 * std::log(z) + M_PI * I * (z + 0.5);
    }
  }
  out.value = v;
  return out;
}

// ---------------------------------------------------------------- kernels

std::vector<Rational> kernel_taylor(BorelKind kind, int terms) {
  // y/(e^y - 1) = 1/E(y) with E(y) = sum_k y^k/(k+1)!, inverted term by term.
  const int m = terms + 2;
  std::vector<Rational> e(m + 1), b(m + 1);
  Rational fact = 1;
  for (int k = 0; k <= m; ++k) {
    fact *= k + 1;
    e[k] = Rational(1) / fact;
  }
  b[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += e[j] * b[k - j];
    b[k] = -acc;
  }
  // k_G(y) = (y/(e^y - 1) - 1 + y/2)/y^2
  if (b[0] != 1 || b[1] != Rational(-1, 2)) throw Error("kernel_taylor: y/(e^y - 1) expansion is inconsistent");
  std::vector<Rational> g(terms);
  for (int j = 0; j < terms; ++j) g[j] = b[j + 2];
  if (kind == BorelKind::G) return g;
  // k_F(y) = k_G(y/2)/2 - k_G(y)
  std::vector<Rational> f(terms);
  Rational half_pow = Rational(1, 2);
  for (int j = 0; j < terms; ++j) {
    f[j] = g[j] * half_pow - g[j];
    half_pow /= 2;
  }
  return f;
}

KernelGate validate_kernel(BorelKind kind, int nmax) {
  KernelGate gate;
  const auto k = kernel_taylor(kind, 2 * nmax);
  const Laurent series = kind == BorelKind::F ? f_series(nmax) : g_series(nmax);
  Rational fact = 1;  // (2n-2)!
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) fact *= Rational((2 * n - 3) * (2 * n - 2));
    const Rational expected = series.coeff(1 - 2 * n) / fact;
    if (k[2 * n - 2] != expected) {
      gate.detail = "y^" + std::to_string(2 * n - 2) + " coefficient " + k[2 * n - 2].str() + " != " + expected.str();
      return gate;
    }
    if (k[2 * n - 1] != 0) {
      gate.detail = "odd coefficient at y^" + std::to_string(2 * n - 1) + " is nonzero";
      return gate;
    }
    gate.checked_through = n;
  }
  gate.ok = true;
  return gate;
}

namespace {

const std::vector<double>& kg_taylor_double() {
  static const std::vector<double> c = [] {
    std::vector<double> out;
    for (const auto& r : kernel_taylor(BorelKind::G, 24)) out.push_back(to_double(r));
    return out;
  }();
  return c;
}

double kernel_g(double y) {
  if (y < 1.0) {
    // radius of convergence 2 pi; 24 terms reach double precision on [0, 1)
    const auto& c = kg_taylor_double();
    double acc = 0;
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) acc = acc * y + c[j];
    return acc;
  }
  return (1.0 / std::expm1(y) - 1.0 / y + 0.5) / y;
}

}  // namespace

double borel_kernel(BorelKind kind, double y) {
  if (y < 0) throw DomainError("borel_kernel: y must be nonnegative");
  return kind == BorelKind::G ? kernel_g(y) : 0.5 * kernel_g(0.5 * y) - kernel_g(y);
}

cplx laplace_oracle(BorelKind kind, cplx c, double eta) {
  static const bool gate_ok = validate_kernel(BorelKind::F).ok && validate_kernel(BorelKind::G).ok;
  if (!gate_ok) throw Error("laplace_oracle: kernel Taylor gate failed");
  const cplx z = c * eta;
  if (!(z.real() > 0)) throw DomainError("laplace_oracle: needs Re(c eta) > 0");
  // |k(y)| <= 1/(2y) for y >= 1, so the tail past Y is below exp(-Re z Y)/(2 Y Re z).
  const double a = z.real();
  double Y = 40.0 / a;
  while (std::exp(-a * Y) / (2 * Y * a) > 1e-16) Y *= 1.5;
  auto f = [&](double y) { return std::exp(-z * y) * borel_kernel(kind, y); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  // panels of about one oscillation keep the rule well resolved
  const int panels = std::max(1, static_cast<int>(std::ceil(Y * std::max(a, std::abs(z.imag())) / 8.0)));
  cplx total = 0.0;
  for (int k = 0; k < panels; ++k) {
    double err = 0;
    total += GK::integrate(f, Y * k / panels, Y * (k + 1) / panels, 10, 1e-14, &err);
  }
  return total;
}

SummabilityReport summability_report(const Parameters& p) {
  auto ok = [](cplx c) { return c == cplx(0) || !purely_imaginary(c, 1e-10); };
  return {ok(p.c_p()), ok(p.c_m()), ok(p.c_inf), ok(p.c_0)};
}

// ---------------------------------------------------------------- connection

Position parse_position(const std::string& text) {
  if (text == "t0") return Position::T0;
  if (text == "t1") return Position::T1;
  if (text == "inside-triangle") return Position::InsideTriangle;
  if (text == "outside-triangle") return Position::OutsideTriangle;
  if (text == "inside-loop") return Position::InsideLoop;
  if (text == "outside-loop") return Position::OutsideLoop;
  throw DomainError("unknown position '" + text + "'");
}

std::string to_string(Position p) {
  switch (p) {
    case Position::T0: return "t0";
    case Position::T1: return "t1";
    case Position::InsideTriangle: return "inside-triangle";
    case Position::OutsideTriangle: return "outside-triangle";
    case Position::InsideLoop: return "inside-loop";
    case Position::OutsideLoop: return "outside-loop";
  }
  return "?";
}

ConnectionMultiplier connection_multiplier(const std::string& wall, Position position, const Parameters& p, double eta,
                                           int power) {
  static const std::vector<std::string> loop_walls{"W1", "W3", "W5", "W7"}, triangle_walls{"W2", "W4", "W6", "W8"};
  const bool loop_wall = std::find(loop_walls.begin(), loop_walls.end(), wall) != loop_walls.end();
  const bool triangle_wall = std::find(triangle_walls.begin(), triangle_walls.end(), wall) != triangle_walls.end();
  if (!loop_wall && !triangle_wall) throw DomainError("unknown wall '" + wall + "'");
  if (power != 1 && power != -1) throw DomainError("connection_multiplier: power must be +1 or -1");

  ConnectionMultiplier m{wall, position, "", 0.0};
  if (position == Position::InsideLoop) {
    if (loop_wall)
      throw UnsupportedError("connection inside the loop on " + wall +
                             " is not resolved: Stokes curves spiral into the point infinitely many times");
    throw UnsupportedError("position inside-loop does not occur on the triangle wall " + wall);
  }
  if (wall == "W2" && (position == Position::T0 || position == Position::InsideTriangle)) {
    m.expression = "1 + exp(pi i (c_inf - c_0) eta)";
    m.value = 1.0 + std::exp(M_PI * I * (p.c_inf - p.c_0) * eta);
  } else if (wall == "W2" && (position == Position::T1 || position == Position::OutsideTriangle)) {
    m.expression = "1";
    m.value = 1.0;
  } else if (wall == "W4" && position == Position::OutsideTriangle) {
    m.expression = power > 0 ? "1 + exp(pi i (c_inf + c_0) eta)" : "(1 + exp(pi i (c_inf + c_0) eta))^-1";
    const cplx base = 1.0 + std::exp(M_PI * I * (p.c_inf + p.c_0) * eta);
    m.value = power > 0 ? base : 1.0 / base;
  } else if (wall == "W4" && position == Position::InsideTriangle) {
    m.expression = "1";
    m.value = 1.0;
  } else if (wall == "W3" && position == Position::OutsideLoop) {
    m.expression = "1";
    m.value = 1.0;
  } else {
    throw UnsupportedError("no connection formula for " + wall + " at position " + to_string(position));
  }
  return m;
}

}  // namespace p3wkb
