#include "f1zeta/cli.hpp"
#include "f1zeta/grothendieck.hpp"
#include "f1zeta/ihara.hpp"
#include "f1zeta/loose_graph.hpp"
#include "f1zeta/pointcount.hpp"
#include "f1zeta/zeta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace f1zeta;

namespace {

py::int_ to_py(const Integer& n) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::list coefficients(const Polynomial& p) {
    py::list out;
    for (const auto& s : to_coefficient_strings(p)) out.append(py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10)));
    return out;
}

Integer from_py(const py::int_& n) { return Integer(py::str(n).cast<std::string>()); }

ZetaStyle style_from(const std::string& s) {
    if (s == "inverse") return ZetaStyle::Inverse;
    if (s == "direct") return ZetaStyle::Direct;
    if (s == "fp") return ZetaStyle::FpDisplay;
    throw py::value_error("style must be 'inverse', 'direct' or 'fp'");
}

}  // namespace

PYBIND11_MODULE(_f1zeta, m) {
    m.doc() = "Class polynomials, F1-zeta and Ihara zeta functions of loose graphs.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<IharaDomainError>(m, "IharaDomainError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<LooseGraph>(m, "Graph")
        .def(py::init<>())
        .def_static("parse", &parse, py::arg("text"), py::arg("strict") = false)
        .def_static("generate", &generate, py::arg("family"), py::arg("params") = std::vector<long>{})
        .def("add_vertex", &LooseGraph::add_vertex)
        .def("add_edge", py::overload_cast<const std::string&, const std::string&>(&LooseGraph::add_edge))
        .def("add_loose", py::overload_cast<const std::string&, unsigned>(&LooseGraph::add_loose), py::arg("vertex"),
             py::arg("count") = 1)
        .def("add_free", &LooseGraph::add_free, py::arg("count") = 1)
        .def_property_readonly("num_vertices", &LooseGraph::num_vertices)
        .def_property_readonly("num_edges", &LooseGraph::num_edges)
        .def_property_readonly("labels", &LooseGraph::labels)
        .def_property_readonly("edges", &LooseGraph::edges)
        .def("to_lg", &serialize)
        .def("__eq__", [](const LooseGraph& a, const LooseGraph& b) { return a == b; })
        .def("__repr__", [](const LooseGraph& g) {
            return "<Graph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
                   " edges>";
        });

    m.def("class_polynomial", [](const LooseGraph& g) { return coefficients(class_polynomial(g)); },
          "Coefficients of the class polynomial, constant term first.");
    m.def("class_string", [](const LooseGraph& g) { return class_polynomial(g).to_string("L"); });
    m.def("ihara_inverse", [](const LooseGraph& g) { return coefficients(ihara_inverse(g)); });
    m.def("edge_matrix_inverse", [](const LooseGraph& g) { return coefficients(edge_matrix_inverse(g)); });
    m.def("zeta_factors", [](const LooseGraph& g) {
        py::list out;
        for (const auto& [k, a] : f1_zeta(class_polynomial(g)).factors) out.append(py::make_tuple(k, to_py(a)));
        return out;
    });
    m.def("zeta_string",
          [](const LooseGraph& g, const std::string& style) {
              return format_zeta(f1_zeta(class_polynomial(g)), style_from(style));
          },
          py::arg("graph"), py::arg("style") = "inverse");
    m.def("count_points",
          [](const LooseGraph& g, std::uint32_t p, std::uint64_t budget) { return to_py(count_points(g, p, budget)); },
          py::arg("graph"), py::arg("p"), py::arg("budget") = kDefaultBudget);
    m.def("verify",
          [](const LooseGraph& g, const std::vector<std::uint32_t>& primes, std::uint64_t budget) {
              const VerifyReport r = verify(g, primes, budget);
              py::list checks;
              for (const auto& c : r.checks) {
                  py::dict d;
                  d["prime"] = c.prime;
                  d["expected"] = to_py(c.expected);
                  d["counted"] = to_py(c.counted);
                  d["ok"] = c.ok;
                  checks.append(d);
              }
              py::dict out;
              out["checks"] = checks;
              out["euler_ok"] = r.eulerOk;
              out["ok"] = r.ok;
              return out;
          },
          py::arg("graph"), py::arg("primes") = std::vector<std::uint32_t>{2, 3, 5},
          py::arg("budget") = kDefaultBudget);
    m.def("trace", [](const LooseGraph& g) {
        const SurgeryTrace tr = surgery_trace(g);
        py::list rows;
        py::dict first;
        first["edge"] = py::none();
        first["delta"] = py::none();
        first["running"] = coefficients(tr.finalTreeClass);
        rows.append(first);
        for (const auto& s : tr.steps) {
            py::dict d;
            d["edge"] = py::make_tuple(s.resolvedEdge.first, s.resolvedEdge.second);
            d["delta"] = coefficients(s.delta);
            d["running"] = coefficients(s.running);
            rows.append(d);
        }
        return rows;
    });
    m.def("run_cli",
          [](const std::vector<std::string>& args, const std::string& input) {
              std::istringstream in(input);
              std::ostringstream out, err;
              const int code = run_cli(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin") = "");
}
