#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p3wkb/algebra.hpp"
#include "p3wkb/laurent.hpp"
#include "p3wkb/series.hpp"

namespace p3wkb {

// sum_{n>=1} (2^{1-2n} - 1)/(2n(2n-1)) B_{2n} z^{1-2n}, through n = nmax.
Laurent f_series(int nmax);
// sum_{n>=1} B_{2n}/(2n(2n-1)) z^{1-2n}, through n = nmax.
Laurent g_series(int nmax);

enum class Target { Inf1, Inf2, Inf3, Inf4, ZeroCInf, ZeroC0, ZeroC };

struct EndpointSpec {
  Equation equation = Equation::D6;
  Target target = Target::Inf3;
  int sign = 1;

  // "d6:inf3:+", "d6:zero_cinf:-", "d7:zero_c:+", "d7:inf2:-"
  static EndpointSpec parse(const std::string& text);
  std::string str() const;
  EndpointSpec flipped() const { return {equation, target, -sign}; }
};

enum class Provenance { ClosedForm, NumericOracle };

// sum_n coefficient_n eta^{1-2n}
struct VorosSeries {
  std::vector<std::pair<int, cplx>> terms;
  Provenance provenance = Provenance::ClosedForm;

  cplx coefficient(int n) const;
};

VorosSeries voros_closed_form(const EndpointSpec& spec, const Parameters& p, int nmax);
VorosSeries voros_closed_form(const EndpointSpec& spec, const D7Parameters& p, int nmax);

struct DifferenceReport {
  std::string name;
  bool ok = false;
  int checked_through = 0;   // lowest power of z compared (negative)
  int first_mismatch = 0;    // power of the first disagreement when !ok
  std::string detail;
};

// kind: "F", "G", "F-unique", "G-unique", or a W-variant
// "W:<target>:T1" / "W:<target>:T2" with target one of inf1..inf4, zero_cinf, zero_c0.
DifferenceReport verify_difference_equation(const std::string& kind, int nmax);
std::vector<std::string> difference_equation_kinds();

// Coefficients a_1..a_{2nmax-1} of z^{-l} solving S(z+1) - S(z) = rhs, order by order.
std::vector<Rational> solve_difference_equation(const Laurent& rhs, int nmax);

struct OracleOptions {
  int tau_index = -1;          // which turning point; -1 picks the best conditioned one
  double loop_fraction = 0.6;  // loop radius relative to the nearest other special point
  double tol = 1e-10;
};

struct OracleResult {
  cplx value;
  cplx leg;   // integral from the loop to the target
  cplx loop;  // full loop integral, enters with weight 1/2
  int evaluations = 0;
  std::vector<cplx> path_u;  // polyline from the loop start to the target
};

OracleResult voros_numeric_oracle(const EndpointSpec& spec, const Parameters& p, int n,
                                  const OracleOptions& opt = {});
OracleResult voros_numeric_oracle(const EndpointSpec& spec, const D7Parameters& p, int n,
                                  const OracleOptions& opt = {});

}  // namespace p3wkb
