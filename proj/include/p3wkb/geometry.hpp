#pragma once

#include <functional>
#include <string>
#include <vector>

#include "p3wkb/algebra.hpp"
#include "p3wkb/series.hpp"

namespace p3wkb {

// The quadratic differential q(u) du^2 on the u-plane together with its special points.
struct QuadDiff {
  struct Pole {
    std::string label;  // terminus label, e.g. "double_pole:c_inf"
    cplx u;
    int order;          // 2 or 4
    cplx residue;       // of sqrt(q) du, up to sign (order 2 only)
  };

  Equation equation = Equation::D6;
  Parameters p{};  // D6
  cplx c7 = 0.0;   // D7
  std::function<cplx(cplx)> q;
  std::vector<cplx> turning;  // zeros of order 3
  cplx simple_pole = -1.0;
  std::vector<Pole> poles;    // finite poles of order >= 2
  double length_scale = 1;    // smallest distance between special points

  static QuadDiff d6(const Parameters& p);
  static QuadDiff d7(const D7Parameters& p);
  std::vector<cplx> special_points() const;
};

struct TraceOptions {
  double eps_trace = 1e-6;
  double eps_deg = 1e-4;
  double r_cap = 1e-3;          // relative to the length scale
  double escape_factor = 1e3;   // escape radius = factor * max(1, largest special point)
  double arc_factor = 10;       // arc budget = factor * escape radius
  double rtol = 1e-10;
};

struct StokesCurve {
  std::string origin;     // "tau0".."tau2" or "simple_pole"
  int origin_index = -1;  // turning point index, -1 for the simple pole
  int ray = 0;
  std::vector<cplx> points;
  std::vector<cplx> w;    // integral of sqrt(q) du from the origin, per point
  std::string terminus;   // escaped, closed_loop, turning_point:k, simple_pole, a pole label, arc_budget, trace_error
  double arc_length = 0;
  double im_defect = 0;   // max |Im w| along the polyline
};

struct DegenerationRecord {
  std::string kind;  // "triangle" or "loop"
  std::vector<std::string> participants;
  double diagnostic = 0;
};

struct StokesDiagram {
  Equation equation = Equation::D6;
  Parameters p{};
  cplx c7 = 0.0;
  std::vector<cplx> turning_points_u;
  cplx simple_pole_u = -1.0;
  std::vector<cplx> double_poles_u;
  std::vector<StokesCurve> curves;
  std::vector<DegenerationRecord> degenerations;

  // "triangle-type", "loop-type", "triangle-type, loop-type" or "no degeneration"
  std::string summary() const;
};

// Unit directions of the Stokes curves leaving `origin` (a turning point or the simple pole).
std::vector<cplx> emanation_directions(const QuadDiff& qd, cplx origin);

StokesCurve trace_curve(const QuadDiff& qd, int origin_index, int ray, const TraceOptions& opt = {});
std::vector<DegenerationRecord> detect_degenerations(const StokesDiagram& d, const QuadDiff& qd,
                                                     const TraceOptions& opt = {});
StokesDiagram trace_diagram(const QuadDiff& qd, const TraceOptions& opt = {});

// 4 t R_{-1} - c_inf log(...) - c_0 log(...), principal logarithms; its t-derivative is 2 R_{-1}.
cplx phi_primitive(const BranchPoint& b, const Parameters& p);
// Same along a path of nearby points, with both logarithms continued.
std::vector<cplx> phi_along(const std::vector<BranchPoint>& path, const Parameters& p);

std::string render_json(const StokesDiagram& d);
StokesDiagram diagram_from_json(const std::string& text);
std::string render_svg(const StokesDiagram& d);

// Curves pushed to the t-plane through t(u).
std::vector<std::vector<cplx>> pushforward_t(const StokesDiagram& d);

}  // namespace p3wkb
