#include "p3wkb/jet.hpp"

#include <algorithm>
#include <cmath>

#include "p3wkb/errors.hpp"

namespace p3wkb {

namespace {

void check_base(const Jet& a, const Jet& b) {
  if (a.base() != b.base()) throw DomainError("jet arithmetic across different base points");
}

int common_order(const Jet& a, const Jet& b) {
  check_base(a, b);
  return std::min(a.order(), b.order());
}

void require_invertible(const Jet& a, const char* what) {
  if (a.order() < 0 || a.value() == cplx(0)) throw SingularError(std::string(what) + ": zero constant term");
}

}  // namespace

Jet::Jet(cplx base, int order) : base_(base), c_(std::max(order, -1) + 1, cplx(0)) {}

Jet::Jet(cplx base, std::vector<cplx> coeffs) : base_(base), c_(std::move(coeffs)) {}

Jet Jet::constant(cplx value, cplx base, int order) {
  Jet j(base, order);
  if (order >= 0) j.c_[0] = value;
  return j;
}

Jet Jet::variable(cplx base, int order) {
  Jet j = constant(base, base, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet Jet::truncated(int order) const {
  Jet j(base_, std::min(order, this->order()));
  std::copy_n(c_.begin(), j.c_.size(), j.c_.begin());
  return j;
}

cplx Jet::eval(cplx s) const {
  cplx r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
  return r;
}

cplx Jet::derivative_at_base(int k) const {
  if (k > order()) throw OrderError("derivative order exceeds jet order");
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return c_[k] * f;
}

double Jet::max_abs() const {
  double m = 0;
  for (auto v : c_) m = std::max(m, std::abs(v));
  return m;
}

Jet& Jet::operator+=(const Jet& o) {
  c_.resize(common_order(*this, o) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_.resize(common_order(*this, o) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator+=(cplx v) {
  if (!c_.empty()) c_[0] += v;
  return *this;
}

Jet& Jet::operator-=(cplx v) {
  if (!c_.empty()) c_[0] -= v;
  return *this;
}

Jet& Jet::operator*=(cplx v) {
  for (auto& x : c_) x *= v;
  return *this;
}

Jet& Jet::operator/=(cplx v) {
  for (auto& x : c_) x /= v;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  const int K = common_order(a, b);
  Jet r(a.base(), K);
  for (int i = 0; i <= K; ++i) {
    if (a[i] == cplx(0)) continue;
    for (int j = 0; i + j <= K; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  require_invertible(b, "jet division");
  const int K = common_order(a, b);
  Jet r(a.base(), K);
  for (int k = 0; k <= K; ++k) {
    cplx acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * r[k - j];
    r[k] = acc / b[0];
  }
  return r;
}

Jet operator+(Jet a, cplx v) { return a += v; }
Jet operator+(cplx v, Jet a) { return a += v; }
Jet operator-(Jet a, cplx v) { return a -= v; }
Jet operator-(cplx v, const Jet& a) { return (-a) += v; }
Jet operator*(Jet a, cplx v) { return a *= v; }
Jet operator*(cplx v, Jet a) { return a *= v; }
Jet operator/(Jet a, cplx v) { return a /= v; }
Jet operator/(cplx v, const Jet& a) { return Jet::constant(v, a.base(), a.order()) / a; }

Jet sqrt(const Jet& a) {
  require_invertible(a, "jet sqrt");
  const int K = a.order();
  Jet r(a.base(), K);
  r[0] = std::sqrt(a[0]);
  for (int k = 1; k <= K; ++k) {
    cplx acc = a[k];
    for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

Jet log(const Jet& a) {
  require_invertible(a, "jet log");
  const int K = a.order();
  Jet r(a.base(), K);
  r[0] = std::log(a[0]);
  for (int k = 1; k <= K; ++k) {
    cplx acc = double(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= double(j) * r[j] * a[k - j];
    r[k] = acc / (double(k) * a[0]);
  }
  return r;
}

Jet exp(const Jet& a) {
  const int K = a.order();
  Jet r(a.base(), K);
  if (K < 0) return r;
  r[0] = std::exp(a[0]);
  for (int k = 1; k <= K; ++k) {
    cplx acc = 0;
    for (int j = 1; j <= k; ++j) acc += double(j) * a[j] * r[k - j];
    r[k] = acc / double(k);
  }
  return r;
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return 1.0 / pow(a, -n);
  Jet r = Jet::constant(1.0, a.base(), a.order()), base = a;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Jet derive(const Jet& a) {
  const int K = a.order();
  Jet r(a.base(), K - 1);
  for (int k = 1; k <= K; ++k) r[k - 1] = double(k) * a[k];
  return r;
}

}  // namespace p3wkb
