#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtdom/constructor.hpp"
#include "dtdom/domination.hpp"
#include "dtdom/enumerate.hpp"
#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/graph_io.hpp"
#include "dtdom/isomorphism.hpp"
#include "dtdom/verify.hpp"

namespace py = pybind11;
using namespace dtdom;

namespace {

VertexSet as_set(const Graph& g, const std::vector<Vertex>& members) {
  return VertexSet::from_members(g.order(), std::span<const Vertex>(members));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Disjunctive total domination toolkit (C++ core)";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
      .def("degree", &Graph::degree)
      .def("to_graph6", &to_graph6)
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("generate", [](const std::string& family) { return generate(FamilyId::parse(family)); }, py::arg("family"),
        "Build a named family graph, e.g. 'T(4)', 'H(3)', 'L(13)'.");
  m.def("classify", [](const Graph& g) -> std::optional<std::string> {
    if (auto id = classify(g)) return id->to_string();
    return std::nullopt;
  });
  m.def("exceptional_member", [](const Graph& g) -> std::optional<std::string> {
    if (auto id = exceptional_member(g)) return id->to_string();
    return std::nullopt;
  });

  m.def(
      "exact_number",
      [](const Graph& g, const std::string& kind) {
        const auto r = exact_number(g, parse_kind(kind));
        return py::make_tuple(r.value, r.witness.members());
      },
      py::arg("graph"), py::arg("kind") = "dtd", "Minimum size and a witness for kind dom | tdom | dtd.");
  m.def(
      "satisfies",
      [](const Graph& g, const std::vector<Vertex>& s, const std::string& kind) {
        return satisfies(g, as_set(g, s), parse_kind(kind));
      },
      py::arg("graph"), py::arg("members"), py::arg("kind") = "dtd");
  m.def("is_dtd_set", [](const Graph& g, const std::vector<Vertex>& s) { return is_dtd_set(g, as_set(g, s)); });
  m.def(
      "uncovered",
      [](const Graph& g, const std::vector<Vertex>& s, const std::string& kind) {
        return uncovered(g, as_set(g, s), parse_kind(kind)).members();
      },
      py::arg("graph"), py::arg("members"), py::arg("kind") = "dtd");

  m.def("dtd_cycle_formula", &dtd_cycle_formula);
  m.def("dtd_path_formula", &dtd_path_formula);
  m.def("gt_cycle_formula", &gt_cycle_formula);

  m.def("construct_dtd_clawfree", [](const Graph& g) {
    const auto c = construct_dtd_clawfree(g);
    return py::make_tuple(c.set.members(), c.method);
  });

  m.def("is_isomorphic", &is_isomorphic);
  m.def(
      "enumerate",
      [](int n, const std::string& cls) {
        std::vector<std::string> out;
        enumerate(EnumSpec{n, parse_graph_class(cls), std::nullopt}, [&](const Graph& g) { out.push_back(to_graph6(g)); });
        return out;
      },
      py::arg("n"), py::arg("cls") = "all", "graph6 strings of one representative per isomorphism class.");

  m.def(
      "verify",
      [](const std::string& theorem, std::optional<int> max_n, int jobs) {
        CheckOptions opt;
        opt.jobs = jobs;
        opt.max_n = max_n;
        py::gil_scoped_release release;
        return emit_report(run_check(theorem, opt), ReportFormat::Json);
      },
      py::arg("theorem"), py::arg("max_n") = std::nullopt, py::arg("jobs") = 1,
      "Run a theorem checker; returns the JSON report text.");
}
