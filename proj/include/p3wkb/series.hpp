#pragma once

#include <string>
#include <vector>

#include "p3wkb/algebra.hpp"
#include "p3wkb/jet.hpp"

namespace p3wkb {

// Formal series sum_k term(k) * eta^(offset - k) with Jet coefficients.
// Only the stored terms are known; powers below lowest_power() are truncated.
class EtaSeries {
 public:
  EtaSeries() = default;
  EtaSeries(int offset, std::vector<Jet> terms) : offset_(offset), terms_(std::move(terms)) {}
  // v + shift * eta^{-1}, padded with zero jets to `size` terms.
  static EtaSeries constant(cplx v, cplx base, int jet_order, int size, cplx shift = 0.0);
  static EtaSeries from_jet(const Jet& j, int size);

  int offset() const { return offset_; }
  int size() const { return static_cast<int>(terms_.size()); }
  int lowest_power() const { return offset_ - size() + 1; }
  cplx base() const { return terms_.empty() ? cplx(0) : terms_[0].base(); }

  const Jet& term(int k) const { return terms_[k]; }
  Jet& term(int k) { return terms_[k]; }
  bool has_power(int power) const { return power <= offset_ && power >= lowest_power(); }
  // Coefficient of eta^power (zero jet above the offset).
  Jet coeff(int power) const;

  // "odd", "even", "mixed" or "zero", judged by exact zero jets.
  std::string parity(double tol = 0.0) const;
  int min_jet_order() const;
  int max_jet_order() const;

  EtaSeries truncated(int size) const;
  EtaSeries times_eta_power(int k) const;

  EtaSeries& operator+=(const EtaSeries& o);
  EtaSeries& operator-=(const EtaSeries& o);
  EtaSeries& operator*=(const Jet& j);
  EtaSeries& operator*=(cplx v);
  EtaSeries operator-() const;

 private:
  int offset_ = 0;
  std::vector<Jet> terms_;
};

EtaSeries operator+(EtaSeries a, const EtaSeries& b);
EtaSeries operator-(EtaSeries a, const EtaSeries& b);
EtaSeries operator*(const EtaSeries& a, const EtaSeries& b);
EtaSeries operator/(const EtaSeries& a, const EtaSeries& b);
EtaSeries operator*(EtaSeries a, const Jet& j);
EtaSeries operator*(const Jet& j, EtaSeries a);
EtaSeries operator*(EtaSeries a, cplx v);
EtaSeries operator*(cplx v, EtaSeries a);
EtaSeries operator+(EtaSeries a, const Jet& j);
EtaSeries operator-(EtaSeries a, const Jet& j);
EtaSeries sqrt(const EtaSeries& a);  // needs an even offset
EtaSeries derive(const EtaSeries& a);

enum class Equation { D6, D7 };

// The equation lambda'' = lambda'^2/lambda - lambda'/t + eta^2 F(lambda, t) with
// parameters that may carry an eta^{-1} shift (as produced by Backlund maps).
// For D7 the single parameter c lives in c_inf.
struct SeriesModel {
  Equation equation = Equation::D6;
  cplx c_inf, c_0;
  cplx shift_inf = 0.0, shift_0 = 0.0;

  static SeriesModel d6(const Parameters& p) { return {Equation::D6, p.c_inf, p.c_0}; }
  static SeriesModel d7(cplx c) { return {Equation::D7, c, 0.0}; }
  // T_1: (c_inf + 1/eta, c_0 + 1/eta); T_2: (c_inf + 1/eta, c_0 - 1/eta).
  SeriesModel shifted_by(int j) const;

  cplx polynomial(cplx lambda, cplx t) const;  // t^2 lambda F at leading order, up to sign
  cplx dF(cplx lambda, cplx t) const;          // leading-order dF/dlambda
  EtaSeries F(const EtaSeries& lambda, const Jet& t) const;
  EtaSeries dF(const EtaSeries& lambda, const Jet& t) const;
  EtaSeries d2F(const EtaSeries& lambda, const Jet& t) const;
};

// Taylor jet of the root lambda0(t) near t0, refined from an initial guess.
Jet lambda0_jet(const SeriesModel& m, cplx t0, cplx lambda0_guess, int jet_order);

struct ZeroParamSolution {
  SeriesModel model;
  EtaSeries lambda;  // offset 0, lambda_0 .. lambda_N
  EtaSeries mu;      // offset 0
  int eta_order = 0;
  int jet_order = 0;
  cplx t0;
};

ZeroParamSolution zero_param_solution(const SeriesModel& m, cplx t0, cplx lambda0, int eta_order, int jet_order);
ZeroParamSolution zero_param_solution(const BranchPoint& b, const Parameters& p, int eta_order = 6,
                                      int jet_order = 10);

// mu from lambda via lambda' = eta dH/dmu (the Hamiltonian of the model).
EtaSeries mu_from_lambda(const SeriesModel& m, const EtaSeries& lambda);

// R = R_{-1} eta + R_0 + ... solving the Riccati equation; r_minus1 fixes the root.
// Returns R_{-1} .. R_{N-1} for a solution with lambda_0 .. lambda_N.
EtaSeries riccati_solution(const ZeroParamSolution& zp, cplx r_minus1);

struct RiccatiPair {
  EtaSeries plus, minus;
};
RiccatiPair riccati_pair(const ZeroParamSolution& zp, cplx r_minus1_plus);
EtaSeries r_odd(const RiccatiPair& r);
EtaSeries r_even(const RiccatiPair& r);

// lambda^(0) / sqrt(t R_odd) = eta^{-1/2} * series.
struct InstantonPrefactor {
  EtaSeries series;  // offset 0; multiply by eta^{-1/2}
  EtaSeries sqrt_t_rodd_scaled;  // sqrt(t R_odd / eta), offset 0
  int half_eta_power = -1;
};
InstantonPrefactor instanton1_prefactor(const ZeroParamSolution& zp, const EtaSeries& rodd);

EtaSeries x_factor(const ZeroParamSolution& zp, const EtaSeries& R);

// (Lambda, M) obtained by T_j; the model of the result is m.shifted_by(j).
ZeroParamSolution backlund_apply(int j, const ZeroParamSolution& zp);

// Residuals, each an EtaSeries whose terms should vanish.
// t^2 lambda lambda'' - t^2 lambda'^2 + t lambda lambda' - eta^2 t^2 lambda F(lambda)
EtaSeries equation_residual(const SeriesModel& m, const EtaSeries& lambda);
// R^2 + R' - (2 lambda'/lambda - 1/t) R - eta^2 (dF(lambda) - eta^{-2} (lambda'/lambda)^2)
EtaSeries riccati_residual(const ZeroParamSolution& zp, const EtaSeries& R);
struct HamiltonianResidual {
  EtaSeries dlambda, dmu;
};
HamiltonianResidual hamiltonian_residual(const SeriesModel& m, const EtaSeries& lambda, const EtaSeries& mu);

// Largest |coefficient| over all terms, relative to the largest entry of `scale`
// at the same power (or absolute when scale is empty).
double series_max_abs(const EtaSeries& s);

}  // namespace p3wkb
