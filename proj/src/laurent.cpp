#include "p3wkb/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace p3wkb {

int Laurent::max_power() const { return c_.empty() ? floor_ : c_.rbegin()->first; }

Rational Laurent::coeff(int power) const {
  auto it = c_.find(power);
  return it == c_.end() ? Rational(0) : it->second;
}

void Laurent::set(int power, const Rational& value) {
  if (power < floor_) return;
  if (value == 0)
    c_.erase(power);
  else
    c_[power] = value;
}

Rational binomial(int k, int j) {
  Rational r(1);
  for (int i = 0; i < j; ++i) r = r * Rational(k - i) / Rational(i + 1);
  return r;
}

Laurent Laurent::shifted(const Rational& a) const {
  Laurent r(floor_);
  for (const auto& [k, v] : c_) {
    // (z + a)^k = sum_j C(k, j) a^j z^{k-j}; finite for k >= 0.
    Rational apow(1);
    for (int j = 0; k - j >= floor_; ++j) {
      if (k >= 0 && j > k) break;
      r.set(k - j, r.coeff(k - j) + v * binomial(k, j) * apow);
      apow *= a;
      if (a == 0) break;
    }
  }
  return r;
}

Laurent Laurent::truncated(int floor) const {
  Laurent r(std::max(floor, floor_));
  for (const auto& [k, v] : c_)
    if (k >= r.floor_) r.c_[k] = v;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  floor_ = std::max(floor_, o.floor_);
  for (const auto& [k, v] : o.c_) set(k, coeff(k) + v);
  for (auto it = c_.begin(); it != c_.end();) it = it->first < floor_ ? c_.erase(it) : std::next(it);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  Laurent neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

Laurent& Laurent::operator*=(const Rational& v) {
  if (v == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [k, x] : c_) x *= v;
  return *this;
}

std::string Laurent::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second << ")z^" << it->first;
    first = false;
  }
  if (first) os << "0";
  os << " + O(z^" << floor_ - 1 << ")";
  return os.str();
}

Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
Laurent operator*(Laurent a, const Rational& v) { return a *= v; }
Laurent operator*(const Rational& v, Laurent a) { return a *= v; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  // Unknown tails contribute below floor + (other's top power).
  int fl = std::max(a.floor() + b.max_power(), b.floor() + a.max_power());
  Laurent r(fl);
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms())
      if (i + j >= fl) r.set(i + j, r.coeff(i + j) + x * y);
  return r;
}

Laurent laurent_constant(const Rational& v, int floor) {
  Laurent r(floor);
  r.set(0, v);
  return r;
}

Laurent laurent_monomial(const Rational& c, int power, int floor) {
  Laurent r(floor);
  r.set(power, c);
  return r;
}

Laurent laurent_linear(const Rational& e, int floor) {
  Laurent r(floor);
  r.set(1, Rational(1));
  r.set(0, e);
  return r;
}

Laurent laurent_log1p(const Rational& a, int floor) {
  Laurent r(floor);
  Rational apow = a;
  for (int j = 1; -j >= floor; ++j) {
    r.set(-j, (j % 2 ? Rational(1) : Rational(-1)) * apow / Rational(j));
    apow *= a;
  }
  return r;
}

int first_mismatch(const Laurent& a, const Laurent& b, int floor) {
  int top = std::max(a.max_power(), b.max_power());
  for (int k = top; k >= floor; --k)
    if (a.coeff(k) != b.coeff(k)) return k;
  return INT_MIN;
}

}  // namespace p3wkb
