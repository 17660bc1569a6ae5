#pragma once

#include <algorithm>
#include <complex>
#include <random>

#include "p3wkb/numerics.hpp"

namespace testing {

using p3wkb::cplx;

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Fixed-seed generators so every run sees the same samples.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(unsigned long long seed = 20240917ULL) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  cplx in_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  // Magnitude in [lo, hi], uniform argument.
  cplx annulus(double lo, double hi) {
    return std::polar(uniform(lo, hi), uniform(-3.14159265358979, 3.14159265358979));
  }
};

}  // namespace testing
