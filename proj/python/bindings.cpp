#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triblock/blocks.hpp"
#include "triblock/constructions.hpp"
#include "triblock/contribution.hpp"
#include "triblock/error.hpp"
#include "triblock/oracle.hpp"
#include "triblock/patterns.hpp"
#include "triblock/plane_graph.hpp"
#include "triblock/report.hpp"

namespace py = pybind11;
using namespace triblock;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triangular-block certificates for planar Theta6 Turan bounds";

  static py::exception<Error> error_type(m, "TriblockError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PlaneGraph>(m, "PlaneGraph")
      .def(py::init([](int n, std::vector<std::vector<Vertex>> rotations) {
             return PlaneGraph::build(n, std::move(rotations));
           }),
           py::arg("n"), py::arg("rotations"))
      .def_property_readonly("order", &PlaneGraph::order)
      .def_property_readonly("size", &PlaneGraph::size)
      .def_property_readonly("num_faces", &PlaneGraph::num_faces)
      .def_property_readonly("rotations", &PlaneGraph::rotations)
      .def_property_readonly("edges", [](const PlaneGraph& pg) { return edge_list(pg.graph()); })
      .def("face_lengths",
           [](const PlaneGraph& pg) {
             std::vector<int> out;
             for (const Face& f : pg.faces()) out.push_back(f.length());
             return out;
           })
      .def("to_native", [](const PlaneGraph& pg) { return to_native(pg); })
      .def("to_dot", [](const PlaneGraph& pg) { return export_dot(pg); })
      .def("__repr__", [](const PlaneGraph& pg) {
        return "<PlaneGraph n=" + std::to_string(pg.order()) + " m=" + std::to_string(pg.size()) +
               " f=" + std::to_string(pg.num_faces()) + ">";
      });

  m.def("parse_native", [](const std::string& text) { return read_plane_graph_any(text); },
        py::arg("text"));
  m.def("parse_dot", [](const std::string& text) { return parse_dot(text); }, py::arg("text"));

  m.def("_decompose_json",
        [](const PlaneGraph& pg) { return decomposition_json(pg, decompose(pg)).dump(); });
  m.def(
      "_certify_json",
      [](const PlaneGraph& pg, const std::string& target, bool check_free) {
        return certificate_json(certify(pg, bound_spec(target), {check_free})).dump();
      },
      py::arg("pg"), py::arg("target"), py::arg("check_free") = false);
  m.def(
      "find_pattern",
      [](int n, const std::vector<std::pair<int, int>>& edges,
         const std::string& pattern) -> std::optional<std::vector<Vertex>> {
        auto match = find_pattern(make_graph(n, edges), parse_pattern(pattern));
        if (!match) return std::nullopt;
        return match->witness.mapping;
      },
      py::arg("n"), py::arg("edges"), py::arg("pattern"));
  m.def(
      "is_planar",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        return is_planar(make_graph(n, edges));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "planar_embedding",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        return planar_embedding(make_graph(n, edges));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "_max_edges_json",
      [](int n, const std::string& pattern, int jobs) {
        OracleOptions options;
        options.jobs = jobs;
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = max_edges(n, parse_pattern(pattern), options);
        }
        return oracle_json(r, false).dump();
      },
      py::arg("n"), py::arg("pattern"), py::arg("jobs") = 1);
  m.def("extremal_graph", &extremal_graph, py::arg("k"));
  m.def("skeleton", [](int k) { return build_skeleton(k).plane_graph; }, py::arg("k"));
  m.def("_verify_extremal_json", [](int k) { return extremal_json(verify_extremal(k)).dump(); },
        py::arg("k"));
  m.def("_catalog_json", [] { return catalog_json().dump(); });
}
