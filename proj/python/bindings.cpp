#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetrasym/families.hpp"
#include "tetrasym/graph_algorithms.hpp"
#include "tetrasym/graph_io.hpp"
#include "tetrasym/isomorphism.hpp"
#include "tetrasym/verification.hpp"

namespace py = pybind11;
using namespace tetrasym;

namespace {

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
    default:
      throw std::runtime_error("unsupported JSON value");
  }
}

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw py::index_error("edge endpoint out of range");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

PYBIND11_MODULE(tetrasym, m) {
  m.doc() = "Tetravalent arc-transitive graph families: construction and verification";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbours", [](const Graph& g, Vertex v) {
        if (v >= g.order()) throw py::index_error("vertex out of range");
        return g.neighbours(v);
      })
      .def("labels", &Graph::labels)
      .def("is_connected", &Graph::is_connected)
      .def("regular_degree", &Graph::regular_degree)
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " edges=" + std::to_string(g.size()) + ">";
      });

  m.def("build", [](const std::string& spec, bool allow_large) {
    return build_family(FamilySpec::parse(spec), allow_large).graph;
  }, py::arg("spec"), py::arg("allow_large") = false,
        "Graph of a family member such as 'gamma:t=3,sign=minus'.");

  m.def("generate", [](const std::string& spec, const std::string& format, bool allow_large) {
    return format_graph(build_family(FamilySpec::parse(spec), allow_large).graph, parse_graph_format(format));
  }, py::arg("spec"), py::arg("format") = "edges", py::arg("allow_large") = false);

  m.def("verify", [](const std::string& spec, const std::vector<std::string>& checks, bool allow_large) {
    VerificationReport report;
    {
      py::gil_scoped_release release;
      report = cmd_verify(FamilySpec::parse(spec), checks, allow_large);
    }
    return to_python(report.to_json());
  }, py::arg("spec"), py::arg("checks") = std::vector<std::string>{}, py::arg("allow_large") = false,
        "Verification report as a dict.");

  m.def("check_names", &all_check_names);

  m.def("girth", &girth, py::arg("graph"));
  m.def("is_bipartite", &is_bipartite, py::arg("graph"));
  m.def("automorphism_group_order", &automorphism_group_order, py::arg("graph"));
  m.def("isomorphic", &isomorphic, py::arg("g1"), py::arg("g2"),
        "A vertex bijection g1 -> g2, or None.");
  m.def("sphere", &sphere, py::arg("graph"), py::arg("v"), py::arg("radius"));

  m.def("element_order_census", [](int t, const std::string& sign) {
    return element_order_census(t, parse_sign(sign));
  }, py::arg("t"), py::arg("sign"));
  m.def("group_order", &extraspecial_group_order, py::arg("t"));

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CosetGraphError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });
}
