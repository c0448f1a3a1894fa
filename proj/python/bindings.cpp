// Copyright 2026 The rotsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotsys/compare.hpp"
#include "rotsys/embedding.hpp"
#include "rotsys/enumerate.hpp"
#include "rotsys/error.hpp"
#include "rotsys/io.hpp"
#include "rotsys/polyhedral.hpp"
#include "rotsys/report.hpp"
#include "rotsys/witness.hpp"

namespace py = pybind11;
using namespace rotsys;

namespace {

// Structured results cross the boundary as plain dicts and lists.
py::object to_python(const report::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

std::vector<std::pair<int, int>> face_pairs(const FaceWalk& f) {
  std::vector<std::pair<int, int>> out;
  for (const Dart& d : f.darts()) out.emplace_back(d.tail, d.head);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rotation systems, polyhedral embeddings and uniqueness certificates";

  // Module-lifetime reference; the module object keeps the type alive.
  static PyObject* error_type =
      PyErr_NewException("rotsys._core.RotsysError", PyExc_ValueError, nullptr);
  m.add_object("RotsysError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc =
          py::handle(error_type)(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("is_three_connected", &is_three_connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  py::class_<EmbeddedGraph>(m, "Embedding")
      .def(py::init([](const std::vector<std::vector<Vertex>>& rot) {
             return build_embedding(static_cast<int>(rot.size()), rot);
           }),
           py::arg("rotations"))
      .def_static("parse", [](const std::string& text) { return parse_rotation_file(text); })
      .def("serialize", [](const EmbeddedGraph& g) { return serialize_rotation_file(g); })
      .def_property_readonly("num_vertices", &EmbeddedGraph::num_vertices)
      .def_property_readonly("num_edges", &EmbeddedGraph::num_edges)
      .def_property_readonly("rotations", &EmbeddedGraph::rotations)
      .def("underlying", &EmbeddedGraph::underlying)
      .def("faces", [](const EmbeddedGraph& g) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& f : trace_faces(g)) out.push_back(face_pairs(f));
        return out;
      })
      .def("next_dart", [](const EmbeddedGraph& g, Vertex tail, Vertex head) {
        const Dart d = next_dart(g, {tail, head});
        return std::make_pair(d.tail, d.head);
      })
      .def("genus", [](const EmbeddedGraph& g) { return genus(g); })
      .def("mirror", [](const EmbeddedGraph& g) { return mirror(g); })
      .def("is_polyhedral", [](const EmbeddedGraph& g) { return check_polyhedral(g).polyhedral; })
      .def("check_polyhedral", [](const EmbeddedGraph& g) {
        const auto v = check_polyhedral(g);
        py::dict d;
        d["polyhedral"] = v.polyhedral;
        d["violation"] = v.violation ? to_python(report::violation(*v.violation)) : py::none();
        return d;
      })
      .def("dual", [](const EmbeddedGraph& g) { return to_python(report::dual(build_dual(g))); })
      .def("dual_is_simple", [](const EmbeddedGraph& g) { return dual_is_simple(g); })
      .def("canonical_key", [](const EmbeddedGraph& g) { return canonical_key(g); })
      .def("__eq__", [](const EmbeddedGraph& a, const EmbeddedGraph& b) { return a == b; })
      .def("__repr__", [](const EmbeddedGraph& g) {
        return "<Embedding n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def("classify_types", [](const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
    return to_python(report::types(classify_types(ref, cand)));
  }, py::arg("ref"), py::arg("cand"));
  m.def("extract_witness", [](const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
    return to_python(report::witness(extract_witness(ref, cand)));
  }, py::arg("ref"), py::arg("cand"));
  m.def("rotation_system_count", &rotation_system_count, py::arg("graph"));
  m.def("enumerate_rotations", [](const Graph& g, std::uint64_t budget) {
    return enumerate_rotations(g, budget);
  }, py::arg("graph"), py::arg("budget") = kDefaultBudget);
  m.def("find_planar_embedding", [](const Graph& g) { return find_planar_embedding(g); },
        py::arg("graph"));
  m.def("genus_census", [](const Graph& g, const std::string& id, std::uint64_t budget) {
    return to_python(report::census(genus_census(g, id, budget)));
  }, py::arg("graph"), py::arg("graph_id") = "", py::arg("budget") = kDefaultBudget);

  auto verifier = [&m](const char* name, VerificationResult (*fn)(const Graph&, std::uint64_t)) {
    m.def(name, [fn](const Graph& g, std::uint64_t budget) {
      return to_python(report::verification(fn(g, budget)));
    }, py::arg("graph"), py::arg("budget") = kDefaultBudget);
  };
  verifier("verify_whitney", &verify_whitney);
  verifier("verify_cubic_corollary", &verify_cubic_corollary);
  verifier("verify_low_connectivity", &verify_low_connectivity);
  verifier("verify_no_polyhedral_higher_genus", &verify_no_polyhedral_higher_genus);
}
