#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3wkb/algebra.hpp"
#include "p3wkb/numerics.hpp"

namespace p3wkb {

enum class BorelKind { F, G };
enum class Side { Plus, Minus };

BorelKind parse_borel_kind(const std::string& text);  // "F" or "G"
Side parse_side(const std::string& text);             // "+" or "-"
std::string to_string(BorelKind k);
std::string to_string(Side s);

struct BorelSumValue {
  std::optional<cplx> value;  // unset when not summable
  Side side = Side::Minus;
  bool summable = false;
  BorelKind kind = BorelKind::G;
  cplx z;  // c * eta
};

// Lateral Borel sums in closed form. Not summable when c eta is purely imaginary.
// Throws DomainError at a pole of Gamma or for eta <= 0.
BorelSumValue borel_sum(BorelKind kind, cplx c, double eta, Side side);
inline BorelSumValue borel_sum_F(cplx c, double eta, Side side) { return borel_sum(BorelKind::F, c, eta, side); }
inline BorelSumValue borel_sum_G(cplx c, double eta, Side side) { return borel_sum(BorelKind::G, c, eta, side); }

// Exact Taylor coefficients of the Laplace kernel at y = 0, derived from its definition.
std::vector<Rational> kernel_taylor(BorelKind kind, int terms);

struct KernelGate {
  bool ok = false;
  int checked_through = 0;  // largest n compared
  std::string detail;
};

// Compares the kernel's Taylor coefficients with the Borel transform of the series:
// coefficient of y^{2n-2} against (coefficient of z^{1-2n}) / (2n-2)!, odd powers zero.
KernelGate validate_kernel(BorelKind kind, int nmax = 8);

// k_G(y) = (1/(e^y - 1) - 1/y + 1/2)/y and k_F(y) = k_G(y/2)/2 - k_G(y), for y >= 0.
double borel_kernel(BorelKind kind, double y);

// Laplace integral of the kernel against exp(-c eta y); needs Re(c eta) > 0.
// Throws Error if the kernel gate fails.
cplx laplace_oracle(BorelKind kind, cplx c, double eta);

struct SummabilityReport {
  bool F_cp = true, F_cm = true, G_cinf = true, G_c0 = true;
};

// Each flag is false iff its argument is purely imaginary (1e-10 relative).
SummabilityReport summability_report(const Parameters& p);

enum class Position { T0, T1, InsideTriangle, OutsideTriangle, InsideLoop, OutsideLoop };

Position parse_position(const std::string& text);  // t0, t1, inside-triangle, outside-triangle, inside-loop, outside-loop
std::string to_string(Position p);

struct ConnectionMultiplier {
  std::string wall;
  Position position = Position::T0;
  std::string expression;
  cplx value;
};

// alpha-tilde / alpha across the wall. `power` selects the exponent +-1 on W4.
// Throws UnsupportedError for positions inside a loop and for unresolved cases.
ConnectionMultiplier connection_multiplier(const std::string& wall, Position position, const Parameters& p, double eta,
                                           int power = 1);

}  // namespace p3wkb
