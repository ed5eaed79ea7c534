#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcurv/bakry_emery.hpp"
#include "rcurv/classify.hpp"
#include "rcurv/cli.hpp"
#include "rcurv/errors.hpp"
#include "rcurv/factorization.hpp"
#include "rcurv/families.hpp"
#include "rcurv/ollivier.hpp"
#include "rcurv/reflective.hpp"
#include "rcurv/spectral.hpp"

namespace py = pybind11;
using namespace rcurv;

namespace {

// Exact values cross the boundary as "p/q" text; the Python side wraps them
// in fractions.Fraction.
std::string text(const Rational& r) { return r.to_string(); }

Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return build_graph(n, es);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("distance", &Graph::distance)
      .def("diameter", &Graph::diameter)
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("family", &build_family, py::arg("expression"));
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("cartesian_product", &cartesian_product);

  m.def("_edge_curvature", [](const Graph& g, Vertex x, Vertex y) { return text(edge_curvature(g, x, y).value); });
  m.def("_oracle_curvature", [](const Graph& g, Vertex x, Vertex y, std::size_t max_support) {
    return text(brute_force_curvature_oracle(g, x, y, max_support));
  });
  m.def("_edge_curvatures", [](const Graph& g) {
    std::vector<std::string> out;
    for (const Rational& r : min_edge_curvature(g).per_edge) out.push_back(text(r));
    return out;
  });
  m.def("_effective_diameter", [](const Graph& g) { return text(effective_diameter(g)); });

  m.def("is_reflective", [](const Graph& g) {
    ReflectiveVerdict v = is_reflective(g);
    py::dict d;
    d["reflective"] = v.reflective;
    d["counterexample"] = v.counterexample ? py::cast(std::pair{v.counterexample->u, v.counterexample->v}) : py::none();
    d["failed_axiom"] = v.reflective ? py::none() : py::cast(to_string(v.failed));
    return d;
  });
  m.def("identify_family", &identify_family);
  m.def("factorize", &factorize);
  m.def("is_prime", &is_prime);
  m.def("smallest_positive_laplacian_eigenvalue", [](const Graph& g) { return smallest_positive_laplacian_eigenvalue(g); });
  m.def("bakry_emery_curvature", [](const Graph& g, Vertex x) { return bakry_emery_curvature(g, x); });
  m.def("_classify_json", [](const Graph& g, double tol) { return classify(g, tol).to_json(); }, py::arg("g"),
        py::arg("tol") = 1e-8);

  m.def(
      "run_command",
      [](const std::string& command, std::optional<std::string> family, std::optional<std::string> file, bool json,
         double tol, const std::string& corpus, std::size_t max_lp_support) {
        CliOptions o;
        o.family = std::move(family);
        o.file = std::move(file);
        o.json = json;
        o.tol = tol;
        o.corpus = corpus;
        o.max_lp_support = max_lp_support;
        CommandResult r;
        {
          py::gil_scoped_release release;
          r = run_command(command, o);
        }
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("command"), py::arg("family") = py::none(), py::arg("file") = py::none(), py::arg("json") = false,
      py::arg("tol") = 1e-8, py::arg("corpus") = "standard", py::arg("max_lp_support") = 10);
}
