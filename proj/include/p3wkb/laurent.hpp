#pragma once

#include <map>
#include <string>

#include "p3wkb/numerics.hpp"

namespace p3wkb {

// Finite Laurent expansion at z = infinity with exact rational coefficients.
// Coefficients of powers >= floor() are exact; lower powers are unknown and
// never stored.
class Laurent {
 public:
  explicit Laurent(int floor = 0) : floor_(floor) {}

  int floor() const { return floor_; }
  int max_power() const;
  Rational coeff(int power) const;
  void set(int power, const Rational& value);
  const std::map<int, Rational>& terms() const { return c_; }

  // S(z + a) re-expanded at infinity.
  Laurent shifted(const Rational& a) const;
  Laurent truncated(int floor) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Rational& v);

  std::string str() const;

 private:
  int floor_;
  std::map<int, Rational> c_;
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator*(Laurent a, const Rational& v);
Laurent operator*(const Rational& v, Laurent a);

Laurent laurent_constant(const Rational& v, int floor);
// c * (z + e)^k for integer k >= 0, or c * z^k for any k when e == 0.
Laurent laurent_monomial(const Rational& c, int power, int floor);
Laurent laurent_linear(const Rational& e, int floor);  // z + e
// log(1 + a/z) = sum_{j>=1} (-1)^{j+1} a^j z^{-j} / j
Laurent laurent_log1p(const Rational& a, int floor);

// Generalized binomial coefficient C(k, j), k any integer, j >= 0.
Rational binomial(int k, int j);

// Highest power at which a and b differ among powers >= floor, or nullopt-like
// sentinel INT_MIN when they agree there.
int first_mismatch(const Laurent& a, const Laurent& b, int floor);

}  // namespace p3wkb
