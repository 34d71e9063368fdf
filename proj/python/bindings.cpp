#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arborium/arbor.hpp"
#include "arborium/error.hpp"
#include "arborium/invariants.hpp"
#include "arborium/json_io.hpp"
#include "arborium/oracle.hpp"
#include "arborium/verify.hpp"

namespace py = pybind11;
using namespace arborium;

namespace {

// Polynomials cross the boundary as JSON text; the Python side decodes them.
std::string poly_json(const MultiPoly& p) {
  nlohmann::json j = poly_to_json(p);
  j["text"] = p.to_string();
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_arborium, m) {
  m.doc() = "Exact invariants of arbors and their polytopes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ArithmeticError);

  py::class_<Arbor>(m, "Arbor")
      .def_property_readonly("size", &Arbor::size)
      .def("__str__", &serialize_arbor)
      .def("__repr__", [](const Arbor& t) { return "Arbor('" + serialize_arbor(t) + "')"; })
      .def("__eq__", [](const Arbor& a, const Arbor& b) { return a == b; })
      .def("constraints", [](const Arbor& t) {
        std::vector<std::pair<std::vector<Label>, int>> out;
        for (const auto& c : constraints(t)) out.emplace_back(c.support, c.bound);
        return out;
      })
      .def("inequalities", [](const Arbor& t) {
        std::vector<std::string> out;
        for (const auto& c : constraints(t)) out.push_back(format_inequality(c));
        return out;
      });

  m.def("parse_arbor", [](const std::string& text) { return parse_arbor(text); });
  m.def("make_tn", &make_tn, py::arg("n"));

  m.def("zeta_poly", [](const Arbor& t) { return poly_json(zeta_poly(t)); });
  m.def("k_poly", [](const Arbor& t) { return poly_json(k_poly(t)); });
  m.def("m_triangle", [](const Arbor& t) { return poly_json(m_triangle(t)); });
  m.def("ehrhart", [](const Arbor& t) { return poly_json(ehrhart(t)); });
  m.def("laplace", [](const Arbor& t) { return poly_json(laplace(t)); });
  m.def("volume", [](const Arbor& t) { return volume(t).to_string(); });
  m.def("count_points", &oracle::count_points, py::arg("arbor"), py::arg("dilation"));

  m.def(
      "verify",
      [](const std::string& theorem, int order) {
        const auto th = parse_theorem(theorem);
        if (!th) throw ValidationError("unknown theorem '" + theorem + "'");
        return report_to_json(verify(*th, order)).dump();
      },
      py::arg("theorem"), py::arg("order") = 10);
}
