#pragma once

#include <vector>

#include "p3wkb/numerics.hpp"

namespace p3wkb {

// Truncated Taylor series sum_{k<=K} a_k s^k in s = t - t0.
class Jet {
 public:
  Jet() = default;
  Jet(cplx base, int order);
  Jet(cplx base, std::vector<cplx> coeffs);

  static Jet constant(cplx value, cplx base, int order);
  // The coordinate t itself: t0 + s.
  static Jet variable(cplx base, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  cplx base() const { return base_; }
  cplx value() const { return c_.empty() ? cplx(0) : c_[0]; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx operator[](int k) const { return c_[k]; }
  cplx& operator[](int k) { return c_[k]; }

  Jet truncated(int order) const;
  // Value of the truncated polynomial at s.
  cplx eval(cplx s) const;
  // k-th derivative with respect to t at the base point.
  cplx derivative_at_base(int k) const;
  double max_abs() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(cplx v);
  Jet& operator-=(cplx v);
  Jet& operator*=(cplx v);
  Jet& operator/=(cplx v);
  Jet operator-() const;

 private:
  cplx base_{0.0, 0.0};
  std::vector<cplx> c_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, cplx v);
Jet operator+(cplx v, Jet a);
Jet operator-(Jet a, cplx v);
Jet operator-(cplx v, const Jet& a);
Jet operator*(Jet a, cplx v);
Jet operator*(cplx v, Jet a);
Jet operator/(Jet a, cplx v);
Jet operator/(cplx v, const Jet& a);

Jet sqrt(const Jet& a);
Jet log(const Jet& a);
Jet exp(const Jet& a);
Jet pow(const Jet& a, int n);
// d/dt; the result has order one less than the argument.
Jet derive(const Jet& a);

}  // namespace p3wkb
