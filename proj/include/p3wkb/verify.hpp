#pragma once

#include <string>
#include <vector>

#include "p3wkb/algebra.hpp"

namespace p3wkb {

// ---------------------------------------------------------------- asymptotics

// Printed leading terms of an expansion near a singular point, in increasing order of smallness.
struct Expansion {
  std::vector<cplx> terms;
  cplx sum() const;
  cplx last() const { return terms.empty() ? cplx(0) : terms.back(); }
};

struct AsymptoticSample {
  Sheet sheet = Sheet::Inf1;
  int sign = 1;          // +1 for the "+" branch of R_{-1}
  std::string quantity;  // lambda0, mu0, lambda(0), mu(0), R-1, R+, R-
  cplx t;
  double eta = 0;
  cplx computed;
  Expansion printed;
  double rel_err = 0;     // |computed - printed| / |computed|
  double tail_ratio = 0;  // |computed - printed| / |last printed term|
};

// Expansions of lambda0, mu0, lambda^(0), mu^(0), R_{-1}, R_+ and R_- on `sheet` (one of
// Inf1..Inf4, ZeroCInf, ZeroC0) at t, with sign selecting the +/- branch of R_{-1}.
// `corrected` replaces the printed coefficients that fail the tail test by consistent ones.
std::vector<Expansion> asymptotic_expansions(Sheet sheet, int sign, const Parameters& p, cplx t, cplx sqrt_t,
                                             double eta, bool corrected);

// Samples every quantity on the six labelled sheets: |t| = abs_t_inf for the sheets at infinity
// and |t| = abs_t_zero at the double poles, at the argument arg_t.
std::vector<AsymptoticSample> asymptotic_samples(const Parameters& p, double abs_t_inf, double abs_t_zero,
                                                 double arg_t, double eta, int sign = 1, bool corrected = false);

// Tolerance on rel_err: 10 |t|^{-1/2} at infinity, 10 |t| at the double poles.
double asymptotic_tolerance(const AsymptoticSample& s);
// Tolerance on tail_ratio: 10 |t|^{-1/2} at infinity, 100 |t| at the double poles.
double asymptotic_tail_tolerance(const AsymptoticSample& s);

// ---------------------------------------------------------------- suites

struct CheckResult {
  std::string suite;
  std::string name;
  int criterion = 0;  // acceptance criterion covered, 0 for supporting checks
  bool ok = false;
  double measured = 0;
  double tolerance = 0;
  double seconds = 0;
  std::string detail;
};

std::vector<std::string> suite_names();  // series, voros, borel, geometry, asymptotics
// Runs one suite or "all". Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace p3wkb
