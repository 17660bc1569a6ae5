#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace p3wkb {

using cplx = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr cplx I{0.0, 1.0};

double to_double(const Rational& r);

// B_n for even n >= 2.
Rational bernoulli(int n);

// Roots of a_0 + a_1 x + ... + a_d x^d, coefficients in ascending order.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

cplx poly_eval(const std::vector<cplx>& coeffs, cplx x);

// log Gamma(z), the branch continuous on C \ (-inf, 0] and real on (0, inf).
cplx log_gamma(cplx z);

// Parse "a+bi", "a-bi", "a", "bi", "i", "-i". Throws DomainError on junk.
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

}  // namespace p3wkb
