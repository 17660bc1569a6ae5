#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "p3wkb/borel.hpp"
#include "p3wkb/errors.hpp"
#include "p3wkb/geometry.hpp"
#include "p3wkb/verify.hpp"
#include "p3wkb/voros.hpp"
#include "p3wkb/walls.hpp"

namespace py = pybind11;
using namespace p3wkb;

namespace {

std::vector<cplx> voros_coefficients(const std::string& endpoint, cplx c_inf, cplx c_0, int nmax) {
  const auto spec = EndpointSpec::parse(endpoint);
  const auto s = spec.equation == Equation::D7 ? voros_closed_form(spec, D7Parameters::make(c_inf), nmax)
                                               : voros_closed_form(spec, Parameters::make(c_inf, c_0), nmax);
  std::vector<cplx> out;
  for (int n = 1; n <= nmax; ++n) out.push_back(s.coefficient(n));
  return out;
}

cplx voros_oracle(const std::string& endpoint, cplx c_inf, cplx c_0, int n) {
  const auto spec = EndpointSpec::parse(endpoint);
  return spec.equation == Equation::D7 ? voros_numeric_oracle(spec, D7Parameters::make(c_inf), n).value
                                       : voros_numeric_oracle(spec, Parameters::make(c_inf, c_0), n).value;
}

}  // namespace

PYBIND11_MODULE(_p3wkb, m) {
  m.doc() = "Exact WKB data of the Painleve III equations of type D6 and D7";

  // translators run newest first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  m.def("parse_complex", &parse_complex);
  m.def("format_complex", &format_complex);

  m.def("voros_coefficients", &voros_coefficients, py::arg("endpoint"), py::arg("c_inf"), py::arg("c_0") = cplx(0),
        py::arg("nmax") = 3, "closed-form coefficients of eta^{1-2n}, n = 1..nmax; D7 takes c as c_inf");
  m.def("voros_oracle", &voros_oracle, py::arg("endpoint"), py::arg("c_inf"), py::arg("c_0") = cplx(0),
        py::arg("n") = 1);

  m.def(
      "borel_sum",
      [](const std::string& kind, cplx c, double eta, const std::string& side) -> py::object {
        const auto v = borel_sum(parse_borel_kind(kind), c, eta, parse_side(side));
        return v.value ? py::cast(*v.value) : py::none();
      },
      py::arg("kind"), py::arg("c"), py::arg("eta"), py::arg("side") = "-");
  m.def(
      "laplace_oracle",
      [](const std::string& kind, cplx c, double eta) { return laplace_oracle(parse_borel_kind(kind), c, eta); },
      py::arg("kind"), py::arg("c"), py::arg("eta"));

  m.def("classify", [](cplx c_inf, cplx c_0) { return classify(Parameters{c_inf, c_0}).label(); });
  m.def("jumping_coefficients", [](const std::string& stratum) {
    std::vector<std::string> out;
    for (Coefficient c : jumping_coefficients(parse_stratum(stratum))) out.push_back(to_string(c));
    return out;
  });
  m.def(
      "connection_multiplier",
      [](const std::string& wall, const std::string& position, cplx c_inf, cplx c_0, double eta, int power) {
        const auto r = connection_multiplier(wall, parse_position(position), Parameters{c_inf, c_0}, eta, power);
        return py::make_tuple(r.expression, r.value);
      },
      py::arg("wall"), py::arg("position"), py::arg("c_inf"), py::arg("c_0"), py::arg("eta"), py::arg("power") = 1);

  m.def(
      "stokes_diagram",
      [](cplx c_inf, cplx c_0, bool d7) {
        const QuadDiff qd = d7 ? QuadDiff::d7(D7Parameters::make(c_inf)) : QuadDiff::d6(Parameters::make(c_inf, c_0));
        return render_json(trace_diagram(qd));
      },
      py::arg("c_inf"), py::arg("c_0") = cplx(0), py::arg("d7") = false, "traced diagram as a JSON string");

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite) {
        py::list out;
        for (const auto& r : run_suite(suite)) {
          py::dict d;
          d["suite"] = r.suite;
          d["name"] = r.name;
          d["criterion"] = r.criterion;
          d["ok"] = r.ok;
          d["measured"] = r.measured;
          d["tolerance"] = r.tolerance;
          d["seconds"] = r.seconds;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");
}
