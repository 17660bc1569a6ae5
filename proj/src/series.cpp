#include "p3wkb/series.hpp"

#include <algorithm>
#include <cmath>

#include "p3wkb/errors.hpp"

namespace p3wkb {

EtaSeries EtaSeries::constant(cplx v, cplx base, int jet_order, int size, cplx shift) {
  std::vector<Jet> t(size, Jet(base, jet_order));
  if (size > 0) t[0] = Jet::constant(v, base, jet_order);
  if (size > 1) t[1] = Jet::constant(shift, base, jet_order);
  return {0, std::move(t)};
}

EtaSeries EtaSeries::from_jet(const Jet& j, int size) {
  std::vector<Jet> t(size, Jet(j.base(), j.order()));
  if (size > 0) t[0] = j;
  return {0, std::move(t)};
}

Jet EtaSeries::coeff(int power) const {
  if (power > offset_) return Jet(base(), max_jet_order());
  if (power < lowest_power()) throw OrderError("eta power below series truncation");
  return terms_[offset_ - power];
}

std::string EtaSeries::parity(double tol) const {
  bool odd = false, even = false;
  for (int k = 0; k < size(); ++k) {
    if (terms_[k].max_abs() <= tol) continue;
    int p = offset_ - k;
    (p % 2 == 0 ? even : odd) = true;
  }
  if (odd && even) return "mixed";
  if (odd) return "odd";
  if (even) return "even";
  return "zero";
}

int EtaSeries::min_jet_order() const {
  int m = 1 << 20;
  for (const auto& t : terms_) m = std::min(m, t.order());
  return terms_.empty() ? 0 : m;
}

int EtaSeries::max_jet_order() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.order());
  return m;
}

EtaSeries EtaSeries::truncated(int size) const {
  EtaSeries r = *this;
  if (size < r.size()) r.terms_.resize(std::max(size, 0));
  return r;
}

EtaSeries EtaSeries::times_eta_power(int k) const {
  EtaSeries r = *this;
  r.offset_ += k;
  return r;
}

EtaSeries& EtaSeries::operator+=(const EtaSeries& o) {
  const int top = std::max(offset_, o.offset_);
  const int low = std::max(lowest_power(), o.lowest_power());
  std::vector<Jet> t;
  for (int p = top; p >= low; --p) {
    const bool a = has_power(p), b = o.has_power(p);
    if (a && b)
      t.push_back(terms_[offset_ - p] + o.terms_[o.offset_ - p]);
    else if (a)
      t.push_back(terms_[offset_ - p]);
    else
      t.push_back(o.terms_[o.offset_ - p]);
  }
  offset_ = top;
  terms_ = std::move(t);
  return *this;
}

EtaSeries& EtaSeries::operator-=(const EtaSeries& o) { return *this += -o; }

EtaSeries& EtaSeries::operator*=(const Jet& j) {
  for (auto& t : terms_) t = t * j;
  return *this;
}

EtaSeries& EtaSeries::operator*=(cplx v) {
  for (auto& t : terms_) t *= v;
  return *this;
}

EtaSeries EtaSeries::operator-() const {
  EtaSeries r = *this;
  for (auto& t : r.terms_) t = -t;
  return r;
}

EtaSeries operator+(EtaSeries a, const EtaSeries& b) { return a += b; }
EtaSeries operator-(EtaSeries a, const EtaSeries& b) { return a -= b; }
EtaSeries operator*(EtaSeries a, const Jet& j) { return a *= j; }
EtaSeries operator*(const Jet& j, EtaSeries a) { return a *= j; }
EtaSeries operator*(EtaSeries a, cplx v) { return a *= v; }
EtaSeries operator*(cplx v, EtaSeries a) { return a *= v; }

EtaSeries operator+(EtaSeries a, const Jet& j) { return a + EtaSeries::from_jet(j, a.size() + std::abs(a.offset())); }
EtaSeries operator-(EtaSeries a, const Jet& j) { return a - EtaSeries::from_jet(j, a.size() + std::abs(a.offset())); }

EtaSeries operator*(const EtaSeries& a, const EtaSeries& b) {
  const int n = std::min(a.size(), b.size());
  std::vector<Jet> t;
  t.reserve(n);
  for (int k = 0; k < n; ++k) {
    Jet acc = a.term(0) * b.term(k);
    for (int i = 1; i <= k; ++i) acc += a.term(i) * b.term(k - i);
    t.push_back(std::move(acc));
  }
  return {a.offset() + b.offset(), std::move(t)};
}

EtaSeries operator/(const EtaSeries& a, const EtaSeries& b) {
  const int n = std::min(a.size(), b.size());
  std::vector<Jet> t;
  t.reserve(n);
  for (int k = 0; k < n; ++k) {
    Jet acc = a.term(k);
    for (int j = 1; j <= k; ++j) acc -= b.term(j) * t[k - j];
    t.push_back(acc / b.term(0));
  }
  return {a.offset() - b.offset(), std::move(t)};
}

EtaSeries sqrt(const EtaSeries& a) {
  if (a.offset() % 2 != 0) throw DomainError("sqrt of an eta-series with odd leading power");
  const int n = a.size();
  std::vector<Jet> t;
  t.reserve(n);
  t.push_back(sqrt(a.term(0)));
  for (int k = 1; k < n; ++k) {
    Jet acc = a.term(k);
    for (int j = 1; j < k; ++j) acc -= t[j] * t[k - j];
    t.push_back(acc / (2.0 * t[0]));
  }
  return {a.offset() / 2, std::move(t)};
}

EtaSeries derive(const EtaSeries& a) {
  std::vector<Jet> t;
  for (int k = 0; k < a.size(); ++k) t.push_back(derive(a.term(k)));
  return {a.offset(), std::move(t)};
}

SeriesModel SeriesModel::shifted_by(int j) const {
  if (equation != Equation::D6) throw UnsupportedError("Backlund shifts are implemented for D6 only");
  if (j != 1 && j != 2) throw DomainError("Backlund index must be 1 or 2");
  SeriesModel r = *this;
  r.shift_inf += 1.0;
  r.shift_0 += (j == 1 ? 1.0 : -1.0);
  return r;
}

cplx SeriesModel::polynomial(cplx l, cplx t) const {
  if (equation == Equation::D6) return l * l * l * l - c_inf * l * l * l + c_0 * t * l - t * t;
  return -2.0 * l * l * l + c_inf * t * l - t * t;
}

cplx SeriesModel::dF(cplx l, cplx t) const {
  if (equation == Equation::D6) return 3.0 * l * l / (t * t) - 2.0 * c_inf * l / (t * t) + 1.0 / (l * l);
  return -4.0 * l / (t * t) + 1.0 / (l * l);
}

namespace {

EtaSeries param(cplx v, cplx shift, const EtaSeries& like) {
  return EtaSeries::constant(v, like.base(), like.max_jet_order(), like.size() + std::abs(like.offset()), shift);
}

}  // namespace

EtaSeries SeriesModel::F(const EtaSeries& L, const Jet& t) const {
  const Jet tinv = 1.0 / t, tinv2 = tinv * tinv;
  const EtaSeries one = param(1.0, 0.0, L);
  const EtaSeries Linv = one / L;
  if (equation == Equation::D6) {
    const EtaSeries L2 = L * L;
    return (L2 * L) * tinv2 - param(c_inf, shift_inf, L) * L2 * tinv2 + param(c_0, shift_0, L) * tinv - Linv;
  }
  return -2.0 * (L * L) * tinv2 + param(c_inf, shift_inf, L) * tinv - Linv;
}

EtaSeries SeriesModel::dF(const EtaSeries& L, const Jet& t) const {
  const Jet tinv = 1.0 / t, tinv2 = tinv * tinv;
  const EtaSeries Linv = param(1.0, 0.0, L) / L;
  if (equation == Equation::D6)
    return 3.0 * (L * L) * tinv2 - 2.0 * param(c_inf, shift_inf, L) * L * tinv2 + Linv * Linv;
  return -4.0 * L * tinv2 + Linv * Linv;
}

EtaSeries SeriesModel::d2F(const EtaSeries& L, const Jet& t) const {
  const Jet tinv = 1.0 / t, tinv2 = tinv * tinv;
  const EtaSeries Linv = param(1.0, 0.0, L) / L;
  if (equation == Equation::D6)
    return 6.0 * L * tinv2 - 2.0 * param(c_inf, shift_inf, L) * tinv2 - 2.0 * Linv * Linv * Linv;
  return param(-4.0, 0.0, L) * tinv2 - 2.0 * Linv * Linv * Linv;
}

Jet lambda0_jet(const SeriesModel& m, cplx t0, cplx guess, int K) {
  // Newton on the defining polynomial in jet arithmetic; each sweep doubles the
  // number of correct Taylor coefficients.
  const Jet t = Jet::variable(t0, K);
  Jet l = Jet::constant(guess, t0, K);
  auto P = [&](const Jet& x) {
    if (m.equation == Equation::D6) return pow(x, 4) - m.c_inf * pow(x, 3) + m.c_0 * t * x - t * t;
    return -2.0 * pow(x, 3) + m.c_inf * t * x - t * t;
  };
  auto dP = [&](const Jet& x) {
    if (m.equation == Equation::D6) return 4.0 * pow(x, 3) - 3.0 * m.c_inf * x * x + m.c_0 * t;
    return -6.0 * x * x + m.c_inf * t;
  };
  int sweeps = 6;
  for (int k = 1; k <= K + 1; k *= 2) ++sweeps;
  for (int it = 0; it < sweeps; ++it) {
    Jet d = dP(l);
    if (std::abs(d.value()) < 1e-300) throw SingularError("lambda0 jet: base point is a turning point");
    l -= P(l) / d;
  }
  return l;
}

EtaSeries mu_from_lambda(const SeriesModel& m, const EtaSeries& L) {
  const Jet t = Jet::variable(L.base(), L.max_jet_order());
  const EtaSeries Lp = derive(L).times_eta_power(-1) * t;  // eta^{-1} t lambda'
  const EtaSeries c0m = param(m.equation == Equation::D6 ? m.c_0 : m.c_inf,
                              (m.equation == Equation::D6 ? m.shift_0 : m.shift_inf) - 1.0, L);
  EtaSeries num = Lp + c0m * L - t;
  if (m.equation == Equation::D6) num += L * L;
  return num / (2.0 * (L * L));
}

ZeroParamSolution zero_param_solution(const SeriesModel& m, cplx t0, cplx lambda0, int N, int K) {
  if (N < 0) throw DomainError("eta order must be non-negative");
  if (K < N + 2) throw OrderError("jet order must be at least eta order + 2");
  if (t0 == cplx(0)) throw SingularError("base point t0 = 0");
  const Jet t = Jet::variable(t0, K);
  const Jet l0 = lambda0_jet(m, t0, lambda0, K);
  // Conditioning: the derivative of the defining polynomial relative to the size
  // of its terms, at the caller's root and at the refined one.
  for (cplx l : {lambda0, l0.value()}) {
    double num, den;
    if (m.equation == Equation::D6) {
      num = std::abs(4.0 * l * l * l - 3.0 * m.c_inf * l * l + m.c_0 * t0);
      den = 4 * std::pow(std::abs(l), 3) + 3 * std::abs(m.c_inf) * std::norm(l) + std::abs(m.c_0 * t0);
    } else {
      num = std::abs(-6.0 * l * l + m.c_inf * t0);
      den = 6 * std::norm(l) + std::abs(m.c_inf * t0);
    }
    if (!(num > 1e-6 * den)) throw SingularError("base point too close to a turning point");
  }
  const SeriesModel lead{m.equation, m.c_inf, m.c_0};
  const Jet D = lead.dF(EtaSeries::from_jet(l0, 1), t).term(0);

  EtaSeries L(0, {l0});
  for (int ell = 1; ell <= N; ++ell) {
    EtaSeries trial = L;
    std::vector<Jet> terms;
    for (int k = 0; k < L.size(); ++k) terms.push_back(L.term(k));
    terms.push_back(Jet(t0, K));
    trial = EtaSeries(0, terms);
    // Residual of lambda'' - lambda'^2/lambda + lambda'/t - eta^2 F at eta^{2-ell}
    // is r - Delta lambda_ell when lambda_ell is set to zero.
    const EtaSeries Lp = derive(trial);
    const EtaSeries E = derive(Lp) - (Lp * Lp) / trial + Lp * (1.0 / t) - m.F(trial, t).times_eta_power(2);
    const Jet r = E.coeff(2 - ell);
    terms.back() = r / D.truncated(r.order());
    L = EtaSeries(0, terms);
  }
  ZeroParamSolution zp{m, L, mu_from_lambda(m, L), N, K, t0};
  return zp;
}

ZeroParamSolution zero_param_solution(const BranchPoint& b, const Parameters& p, int N, int K) {
  return zero_param_solution(SeriesModel::d6(p), b.t, b.lambda0, N, K);
}

EtaSeries riccati_solution(const ZeroParamSolution& zp, cplx r_minus1) {
  const EtaSeries& L = zp.lambda;
  const int N = L.size() - 1;
  const cplx t0 = zp.t0;
  const Jet t = Jet::variable(t0, zp.jet_order);
  const EtaSeries Lp = derive(L);
  const EtaSeries logd = Lp / L;
  const EtaSeries A = 2.0 * logd - EtaSeries::from_jet(1.0 / t, L.size());
  const EtaSeries B = zp.model.dF(L, t) - (logd * logd).times_eta_power(-2);

  Jet rm1 = sqrt(B.term(0));
  if (std::abs(rm1.value() - r_minus1) > std::abs(rm1.value() + r_minus1)) rm1 = -rm1;
  std::vector<Jet> terms{rm1};
  // R_ell from the eta^{1-ell} coefficient of R^2 + R' - A R - eta^2 B.
  for (int ell = 0; ell <= N - 1; ++ell) {
    terms.push_back(Jet(t0, zp.jet_order));
    const EtaSeries R(1, terms);
    const EtaSeries Q = R * R + derive(R) - A * R - B.times_eta_power(2);
    const Jet r = Q.coeff(1 - ell);
    terms.back() = -r / (2.0 * rm1.truncated(r.order()));
  }
  return EtaSeries(1, terms);
}

RiccatiPair riccati_pair(const ZeroParamSolution& zp, cplx r_minus1_plus) {
  return {riccati_solution(zp, r_minus1_plus), riccati_solution(zp, -r_minus1_plus)};
}

EtaSeries r_odd(const RiccatiPair& r) {
  EtaSeries s = 0.5 * (r.plus - r.minus);
  // Even powers cancel exactly in exact arithmetic; make that structural.
  for (int k = 0; k < s.size(); ++k)
    if ((s.offset() - k) % 2 == 0) s.term(k) = Jet(s.term(k).base(), s.term(k).order());
  return s;
}

EtaSeries r_even(const RiccatiPair& r) {
  EtaSeries s = 0.5 * (r.plus + r.minus);
  for (int k = 0; k < s.size(); ++k)
    if ((s.offset() - k) % 2 != 0) s.term(k) = Jet(s.term(k).base(), s.term(k).order());
  return s;
}

InstantonPrefactor instanton1_prefactor(const ZeroParamSolution& zp, const EtaSeries& rodd) {
  const Jet t = Jet::variable(zp.t0, zp.jet_order);
  const EtaSeries tr = (rodd * t).times_eta_power(-1);
  if (tr.term(0).value() == cplx(0)) throw SingularError("t R_odd has vanishing leading term");
  InstantonPrefactor out;
  out.sqrt_t_rodd_scaled = sqrt(tr);
  out.series = zp.lambda / out.sqrt_t_rodd_scaled;
  return out;
}

EtaSeries x_factor(const ZeroParamSolution& zp, const EtaSeries& R) {
  if (zp.model.equation != Equation::D6) throw UnsupportedError("X factor is defined for D6");
  const EtaSeries& L = zp.lambda;
  const Jet t = Jet::variable(zp.t0, zp.jet_order);
  const EtaSeries L2 = L * L, L3 = L2 * L;
  const EtaSeries c0m = param(zp.model.c_0, zp.model.shift_0 - 1.0, L);
  return (R * t).times_eta_power(-1) / (2.0 * L2) - (derive(L) * t).times_eta_power(-1) / L3 - c0m / (2.0 * L2) +
         EtaSeries::from_jet(t, L.size()) / L3;
}

ZeroParamSolution backlund_apply(int j, const ZeroParamSolution& zp) {
  const SeriesModel& m = zp.model;
  const SeriesModel target = m.shifted_by(j);
  const EtaSeries& L = zp.lambda;
  const EtaSeries& Mu = zp.mu;
  const Jet t = Jet::variable(zp.t0, zp.jet_order);
  const EtaSeries T = EtaSeries::from_jet(t, L.size());
  const EtaSeries one = param(1.0, 0.0, L);
  const EtaSeries cs_plus = param(m.c_inf + m.c_0, m.shift_inf + m.shift_0 + 1.0, L);   // c_inf + c_0 + 1/eta
  const EtaSeries cs_minus = param(m.c_inf + m.c_0, m.shift_inf + m.shift_0 - 1.0, L);  // c_inf + c_0 - 1/eta
  const EtaSeries cd = param(m.c_inf - m.c_0, m.shift_inf - m.shift_0 + 1.0, L);        // c_inf - c_0 + 1/eta
  const EtaSeries mu1 = Mu - one;
  EtaSeries Lam, M;
  if (j == 1) {
    Lam = -(T / L) + (cs_plus * T) / (2.0 * (L * L) * mu1 + cd * L + 2.0 * T);
    M = (L * L) * mu1 / T + cd * L / (2.0 * T) + one;
  } else {
    Lam = (2.0 * T * mu1) / (2.0 * L * mu1 + cd);
    const EtaSeries w = L + cd / (2.0 * mu1);
    M = (0.5 * cs_minus * w - w * w * Mu) / T;
  }
  ZeroParamSolution out{target, Lam, M, zp.eta_order, zp.jet_order, zp.t0};
  return out;
}

EtaSeries equation_residual(const SeriesModel& m, const EtaSeries& L) {
  const Jet t = Jet::variable(L.base(), L.max_jet_order());
  const Jet t2 = t * t;
  const EtaSeries Lp = derive(L), Lpp = derive(Lp);
  const EtaSeries one = param(1.0, 0.0, L);
  // t^2 lambda F(lambda) written polynomially.
  EtaSeries poly;
  if (m.equation == Equation::D6) {
    const EtaSeries L2 = L * L;
    poly = L2 * L2 - param(m.c_inf, m.shift_inf, L) * L2 * L + param(m.c_0, m.shift_0, L) * L * t - one * t2;
  } else {
    poly = -2.0 * (L * L * L) + param(m.c_inf, m.shift_inf, L) * L * t - one * t2;
  }
  return (L * Lpp) * t2 - (Lp * Lp) * t2 + (L * Lp) * t - poly.times_eta_power(2);
}

EtaSeries riccati_residual(const ZeroParamSolution& zp, const EtaSeries& R) {
  const EtaSeries& L = zp.lambda;
  const Jet t = Jet::variable(zp.t0, zp.jet_order);
  const EtaSeries Lp = derive(L);
  const EtaSeries g = Lp / L;
  const EtaSeries A = 2.0 * g - EtaSeries::from_jet(1.0 / t, L.size());
  const EtaSeries B = zp.model.dF(L, t) - (g * g).times_eta_power(-2);
  return R * R + derive(R) - A * R - B.times_eta_power(2);
}

HamiltonianResidual hamiltonian_residual(const SeriesModel& m, const EtaSeries& L, const EtaSeries& Mu) {
  if (m.equation != Equation::D6) throw UnsupportedError("Hamiltonian residual implemented for D6");
  const Jet t = Jet::variable(L.base(), std::max(L.max_jet_order(), Mu.max_jet_order()));
  const Jet tinv = 1.0 / t;
  const EtaSeries one = param(1.0, 0.0, L);
  const EtaSeries c0m = param(m.c_0, m.shift_0 - 1.0, L);
  const EtaSeries csm = param(m.c_inf + m.c_0, m.shift_inf + m.shift_0 - 1.0, L);
  const EtaSeries L2 = L * L;
  const EtaSeries dHdmu = (2.0 * L2 * Mu - L2 - c0m * L + one * t) * tinv;
  const EtaSeries dHdl = (2.0 * L * Mu * Mu - (2.0 * L + c0m) * Mu + 0.5 * csm) * tinv;
  return {derive(L) - dHdmu.times_eta_power(1), derive(Mu) + dHdl.times_eta_power(1)};
}

double series_max_abs(const EtaSeries& s) {
  double m = 0;
  for (int k = 0; k < s.size(); ++k) m = std::max(m, s.term(k).max_abs());
  return m;
}

}  // namespace p3wkb
