#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permideal/ideal.hpp"
#include "permideal/permanental.hpp"
#include "permideal/poly_text.hpp"
#include "permideal/primes.hpp"
#include "permideal/report_json.hpp"
#include "permideal/verify.hpp"

namespace py = pybind11;
using namespace permideal;

namespace {

Ring make_ring(int m, int n, const std::string& field) {
  return Ring(Shape(m, n), FieldSpec::parse(field));
}

GbOptions budget_options(long budget_ms) {
  GbOptions o;
  if (budget_ms > 0) o.budget = Budget::millis(budget_ms);
  return o;
}

std::vector<std::string> texts(const std::vector<Polynomial>& polys, const TermOrder& order) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(print_poly(p, order));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases and decompositions of 2x2 permanental ideals.";

  auto base = py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<Ring>(m, "Ring")
      .def(py::init(&make_ring), py::arg("m"), py::arg("n"), py::arg("field") = "q")
      .def_property_readonly("m", [](const Ring& r) { return r.shape.m; })
      .def_property_readonly("n", [](const Ring& r) { return r.shape.n; })
      .def_property_readonly("field", [](const Ring& r) { return r.field.name(); })
      .def("__repr__", [](const Ring& r) {
        return "Ring(" + std::to_string(r.shape.m) + ", " + std::to_string(r.shape.n) + ", '" +
               r.field.name() + "')";
      });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const Ring& ring) { return parse_poly(text, ring); }),
           py::arg("text"), py::arg("ring"))
      .def("__str__", [](const Polynomial& p) { return p.to_string(); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, unsigned e) { return a.pow(e); })
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const Ring& ring, const std::vector<std::string>& gens) {
             std::vector<Polynomial> polys;
             for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
             return Ideal(ring, std::move(polys));
           }),
           py::arg("ring"), py::arg("generators"))
      .def_property_readonly("ring", &Ideal::ring)
      .def_property_readonly("generators",
                             [](const Ideal& i) { return texts(i.generators(), TermOrder::diag_lex()); })
      .def(
          "groebner_basis",
          [](const Ideal& i, const std::string& order, long budget_ms) {
            const TermOrder o = TermOrder::parse(order);
            return texts(i.basis(o, budget_options(budget_ms)), o);
          },
          py::arg("order") = "diag-lex", py::arg("budget_ms") = 0)
      .def(
          "contains",
          [](const Ideal& i, const std::string& f, const std::string& order) {
            return ideal_member(parse_poly(f, i.ring()), i, TermOrder::parse(order));
          },
          py::arg("poly"), py::arg("order") = "diag-lex")
      .def(
          "radical_contains",
          [](const Ideal& i, const std::string& f, const std::string& order) {
            return radical_member(parse_poly(f, i.ring()), i, TermOrder::parse(order));
          },
          py::arg("poly"), py::arg("order") = "diag-lex")
      .def(
          "equals",
          [](const Ideal& a, const Ideal& b, const std::string& order) {
            return ideal_equal(a, b, TermOrder::parse(order));
          },
          py::arg("other"), py::arg("order") = "diag-lex");

  m.def(
      "intersect",
      [](const std::vector<Ideal>& ideals, const std::string& order) {
        return intersect_all(ideals, TermOrder::parse(order));
      },
      py::arg("ideals"), py::arg("order") = "diag-lex");

  m.def("permanental_ideal", &permanental_ideal, py::arg("ring"), py::arg("r") = 2);
  m.def("radical_generators", &radical_generators, py::arg("ring"));
  m.def("embedded_component", &embedded_Q, py::arg("ring"));
  m.def("unmixed_part", &unmixed_part, py::arg("ring"), py::arg("which"));

  m.def("gb_count", [](int rows, int cols) { return gb_count_formula(Shape(rows, cols)); });
  m.def("radical_gb_count",
        [](int rows, int cols) { return radical_gb_count_formula(Shape(rows, cols)); });
  m.def("component_count", [](int rows, int cols) { return component_count(Shape(rows, cols)); });
  m.def("gap_length", [](int rows, int cols) { return gap_length_formula(Shape(rows, cols)); });

  m.def(
      "minimal_primes",
      [](int rows, int cols) {
        const Shape shape(rows, cols);
        std::vector<std::pair<std::string, int>> out;
        for (const auto& p : minimal_primes(shape)) out.emplace_back(p.describe(), p.height(shape));
        return out;
      },
      py::arg("m"), py::arg("n"));

  m.def(
      "verify_json",
      [](int rows, int cols, const std::string& field, const std::string& order,
         const std::vector<std::string>& checks, bool allow_large) {
        SuiteOptions o;
        o.shape = Shape(rows, cols);
        o.field = FieldSpec::parse(field);
        o.order = TermOrder::parse(order);
        o.checks = checks;
        o.allow_large = allow_large;
        Report report;
        {
          py::gil_scoped_release release;
          report = run_suite(o);
        }
        return report_to_json(report);
      },
      py::arg("m") = 3, py::arg("n") = 3, py::arg("field") = "q", py::arg("order") = "diag-lex",
      py::arg("checks") = std::vector<std::string>{}, py::arg("allow_large") = false);

  m.attr("__version__") = tool_version();
}
