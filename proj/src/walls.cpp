#include "p3wkb/walls.hpp"

#include <array>
#include <cmath>

#include "p3wkb/errors.hpp"

namespace p3wkb {

namespace {

const std::array<const char*, 8> kRoman{"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};

}  // namespace

std::string Stratum::label() const {
  switch (kind) {
    case Kind::Chamber: return kRoman.at(index - 1);
    case Kind::Wall: return "W" + std::to_string(index);
    case Kind::Origin: return "origin";
  }
  return "?";
}

Stratum parse_stratum(const std::string& label) {
  if (label == "origin") return {Stratum::Kind::Origin, 0};
  for (int k = 0; k < 8; ++k) {
    if (label == kRoman[k]) return {Stratum::Kind::Chamber, k + 1};
    if (label == "W" + std::to_string(k + 1)) return {Stratum::Kind::Wall, k + 1};
  }
  throw DomainError("unknown stratum '" + label + "'");
}

Stratum classify(const Parameters& p, double tol) {
  const double x = p.c_inf.real(), y = p.c_0.real();
  const double eps = tol * std::max(1.0, p.scale());
  const double cp = 0.5 * (x + y), cm = 0.5 * (x - y);
  const bool zx = std::abs(x) <= eps, zy = std::abs(y) <= eps;
  const bool zp = std::abs(cp) <= eps, zm = std::abs(cm) <= eps;
  if (zx && zy) return {Stratum::Kind::Origin, 0};
  // defining equality and strict companion inequality, in the order W1..W8
  if (zy && x > 0) return {Stratum::Kind::Wall, 1};
  if (zm && cp > 0) return {Stratum::Kind::Wall, 2};
  if (zx && y > 0) return {Stratum::Kind::Wall, 3};
  if (zp && cm < 0) return {Stratum::Kind::Wall, 4};
  if (zy && x < 0) return {Stratum::Kind::Wall, 5};
  if (zm && cp < 0) return {Stratum::Kind::Wall, 6};
  if (zx && y < 0) return {Stratum::Kind::Wall, 7};
  if (zp && cm > 0) return {Stratum::Kind::Wall, 8};
  // sign vector (Re c_inf, Re c_0, Re c_p, Re c_m) -> sector
  const bool sx = x > 0, sy = y > 0, sp = cp > 0, sm = cm > 0;
  if (sx && sy && sm) return {Stratum::Kind::Chamber, 1};
  if (sx && sy && !sm) return {Stratum::Kind::Chamber, 2};
  if (!sx && sy && sp) return {Stratum::Kind::Chamber, 3};
  if (!sx && sy && !sp) return {Stratum::Kind::Chamber, 4};
  if (!sx && !sy && !sm) return {Stratum::Kind::Chamber, 5};
  if (!sx && !sy && sm) return {Stratum::Kind::Chamber, 6};
  if (sx && !sy && !sp) return {Stratum::Kind::Chamber, 7};
  if (sx && !sy && sp) return {Stratum::Kind::Chamber, 8};
  throw Error("classify: inconsistent sign vector");
}

std::string to_string(Coefficient c) {
  switch (c) {
    case Coefficient::F_cp: return "F(c_p)";
    case Coefficient::F_cm: return "F(c_m)";
    case Coefficient::G_cinf: return "G(c_inf)";
    case Coefficient::G_c0: return "G(c_0)";
  }
  return "?";
}

std::vector<Coefficient> jumping_coefficients(const Stratum& s) {
  switch (s.kind) {
    case Stratum::Kind::Chamber: return {};
    case Stratum::Kind::Origin: return {Coefficient::F_cp, Coefficient::F_cm, Coefficient::G_cinf, Coefficient::G_c0};
    case Stratum::Kind::Wall:
      switch (s.index) {
        case 1:
        case 5: return {Coefficient::G_c0};
        case 2:
        case 6: return {Coefficient::F_cm};
        case 3:
        case 7: return {Coefficient::G_cinf};
        default: return {Coefficient::F_cp};
      }
  }
  return {};
}

}  // namespace p3wkb
