#pragma once

#include <array>
#include <string>
#include <vector>

#include "p3wkb/numerics.hpp"

namespace p3wkb {

struct Parameters {
  cplx c_inf;
  cplx c_0;

  cplx c_p() const { return 0.5 * (c_inf + c_0); }
  cplx c_m() const { return 0.5 * (c_inf - c_0); }
  double scale() const { return std::max(std::abs(c_inf), std::abs(c_0)); }

  // Empty when generic, otherwise the name of the violated condition.
  std::string genericity_violation(double rel_tol = 1e-12) const;
  bool generic(double rel_tol = 1e-12) const { return genericity_violation(rel_tol).empty(); }
  // Throws DegenerateError when not generic.
  static Parameters make(cplx c_inf, cplx c_0);
  Parameters scaled(double r) const { return {c_inf / r, c_0 / r}; }
  Parameters swapped() const { return {c_0, c_inf}; }
};

enum class Sheet { Inf1, Inf2, Inf3, Inf4, ZeroCInf, ZeroC0, SimplePole, Generic };

std::string to_string(Sheet s);

// One root lambda0 of the quartic at t, with the choice R_{-1} = sign * sqrt(Delta).
// For asymptotic sheets the sign is measured against the reference behaviour
// (2 lambda0/t near infinity, c_inf/t and c_0/t near the double poles);
// for Generic it is measured against the principal square root.
struct BranchPoint {
  cplx t;
  cplx lambda0;
  Sheet sheet = Sheet::Generic;
  int sign = 1;
};

// F(lambda, t) and dF/dlambda.
cplx rhs_F(cplx lambda, cplx t, const Parameters& p);
cplx rhs_dF(cplx lambda, cplx t, const Parameters& p);
// lambda^4 - c_inf lambda^3 + c_0 t lambda - t^2
cplx quartic(cplx lambda, cplx t, const Parameters& p);

std::array<BranchPoint, 4> lambda0_branches(cplx t, const Parameters& p);
Sheet classify_sheet(cplx t, cplx lambda0, const Parameters& p);

cplx delta(const BranchPoint& b, const Parameters& p);
cplx mu0(const BranchPoint& b, const Parameters& p);
// R_{-1} for the branch point: the square root of Delta selected by b.sign.
cplx r_minus1(const BranchPoint& b, const Parameters& p);
// Reference value used to fix the sign on asymptotic sheets; 0 for Generic.
cplx sign_reference(Sheet s, cplx t, cplx lambda0, const Parameters& p);

struct TurningPointSet {
  std::array<cplx, 3> t;
  std::array<cplx, 3> lambda0;
  std::array<cplx, 3> u;
  cplx simple_pole_u = -1.0;
};

// Ascending coefficients of -256 t^3 + 192 c_inf c_0 t^2 + (...) t + 4 c_inf^3 c_0^3.
std::array<cplx, 4> turning_cubic(const Parameters& p);
cplx cubic_discriminant(const std::array<cplx, 4>& a);
TurningPointSet turning_points(const Parameters& p);

// The rational uniformization u = (1 - mu0)/mu0 of the lambda0 curve.
struct UChart {
  Parameters p;

  cplx u_of_branch(const BranchPoint& b) const;
  cplx t_of_u(cplx u) const;
  cplx lambda0_of_u(cplx u) const;
  cplx dt_du(cplx u) const;
  cplx q(cplx u) const;
  // The three zeros of q.
  std::array<cplx, 3> turning_points_u() const;
  cplx double_pole_cinf() const { return p.c_m() / p.c_p(); }
  cplx double_pole_c0() const { return -p.c_m() / p.c_p(); }
};

struct Residue {
  std::string where;  // "inf", "0", "double_c_inf", "double_c_0"
  cplx u;             // location (unused for "inf")
  cplx closed_form;   // one of the two signs
  cplx numeric;       // contour value, sign aligned with closed_form
};

std::vector<Residue> residues(const Parameters& p);

// D7 counterpart: lambda'' = lambda'^2/lambda - lambda'/t + eta^2 (-2 lambda^2/t^2 + c/t - 1/lambda).
struct D7Parameters {
  cplx c;
  static D7Parameters make(cplx c);
};

cplx d7_rhs_F(cplx lambda, cplx t, cplx c);
cplx d7_rhs_dF(cplx lambda, cplx t, cplx c);
cplx d7_cubic(cplx lambda, cplx t, cplx c);  // -2 lambda^3 + c t lambda - t^2
std::array<cplx, 3> d7_lambda0_roots(cplx t, cplx c);

struct D7UChart {
  cplx c;
  cplx u_of_lambda(cplx t, cplx lambda0) const;  // 1/mu0
  cplx t_of_u(cplx u) const { return u * u * (c - u) / 2.0; }
  cplx lambda0_of_u(cplx u) const { return u * (c - u) / 2.0; }
  cplx dt_du(cplx u) const { return u * (2.0 * c - 3.0 * u) / 2.0; }
  cplx q(cplx u) const;
  cplx turning_point_u() const { return 2.0 * c / 3.0; }
};

}  // namespace p3wkb
