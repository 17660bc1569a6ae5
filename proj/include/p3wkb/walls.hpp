#pragma once

#include <string>
#include <vector>

#include "p3wkb/algebra.hpp"

namespace p3wkb {

// Chambers I..VIII and walls W1..W8 are the open sectors and rays of the
// (Re c_inf, Re c_0) plane, counterclockwise from W1 on the positive Re c_inf axis.
// Origin is the point Re c_inf = Re c_0 = 0, where all eight walls meet.
struct Stratum {
  enum class Kind { Chamber, Wall, Origin };
  Kind kind = Kind::Chamber;
  int index = 1;  // 1..8 for chambers and walls, 0 for the origin

  std::string label() const;  // "I".."VIII", "W1".."W8", "origin"
  bool operator==(const Stratum&) const = default;
};

Stratum parse_stratum(const std::string& label);

// Walls are detected with tolerance tol relative to max(1, |c|).
Stratum classify(const Parameters& p, double tol = 1e-10);

enum class Coefficient { F_cp, F_cm, G_cinf, G_c0 };
std::string to_string(Coefficient c);  // "F(c_p)", "F(c_m)", "G(c_inf)", "G(c_0)"

// Voros building blocks that lose Borel summability on the stratum; empty on chambers.
std::vector<Coefficient> jumping_coefficients(const Stratum& s);

}  // namespace p3wkb
