#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "compgraph/adversarial.hpp"
#include "compgraph/enumerator.hpp"
#include "compgraph/graph.hpp"
#include "compgraph/graph_io.hpp"
#include "compgraph/invariant.hpp"
#include "compgraph/isomorphism.hpp"

namespace py = pybind11;
using namespace compgraph;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [i, j] : pairs) edges.push_back({i, j});
  return edges;
}

std::vector<std::pair<Vertex, Vertex>> from_edges(const ComputationalGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.from, e.to);
  return pairs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant hashing, enumeration and isomorphism checks for colored DAGs";

  py::register_exception<Error>(m, "GraphError", PyExc_ValueError);

  py::class_<ComputationalGraph>(m, "Graph")
      .def_property_readonly("n", &ComputationalGraph::vertex_count)
      .def_property_readonly("k", &ComputationalGraph::color_count)
      .def_property_readonly("colors", [](const ComputationalGraph& g) {
        return std::vector<Color>(g.colors().begin(), g.colors().end());
      })
      .def_property_readonly("edges", &from_edges)
      .def("to_json", &graph_to_json)
      .def("__eq__", [](const ComputationalGraph& a, const ComputationalGraph& b) { return a == b; })
      .def("__repr__", [](const ComputationalGraph& g) { return "Graph(" + graph_to_json(g) + ")"; });

  m.def(
      "validate",
      [](std::size_t n, std::size_t k, const std::vector<std::pair<Vertex, Vertex>>& edges,
         const std::vector<Color>& colors) { return validate(n, k, to_edges(edges), colors); },
      py::arg("n"), py::arg("k"), py::arg("edges"), py::arg("colors"));
  m.def(
      "normalize_dag",
      [](std::size_t n, std::size_t k, const std::vector<std::pair<Vertex, Vertex>>& edges,
         const std::vector<Color>& colors) { return normalize_dag(n, k, to_edges(edges), colors); },
      py::arg("n"), py::arg("k"), py::arg("edges"), py::arg("colors"));
  m.def("parse_graph", &parse_graph, py::arg("text"), py::arg("normalize") = false);

  m.def(
      "apply_permutation",
      [](const ComputationalGraph& g, const std::vector<Vertex>& images) {
        return apply_permutation(g, Permutation(images));
      },
      py::arg("graph"), py::arg("images"));
  m.def("linear_extensions", [](const ComputationalGraph& g) {
    std::vector<std::vector<Vertex>> out;
    for (const Permutation& p : linear_extensions(g)) out.emplace_back(p.images().begin(), p.images().end());
    return out;
  });

  m.def(
      "graph_invariant",
      [](const ComputationalGraph& g, const std::string& backend) {
        return graph_invariant(g, parse_backend(backend)).hex();
      },
      py::arg("graph"), py::arg("backend") = "md5");

  m.def(
      "are_isomorphic",
      [](const ComputationalGraph& a, const ComputationalGraph& b) -> std::optional<std::vector<Vertex>> {
        const IsoWitness w = are_isomorphic(a, b);
        if (!w.isomorphic()) return std::nullopt;
        return std::vector<Vertex>(w.mapping->images().begin(), w.mapping->images().end());
      },
      "Returns the witness images (1-indexed) or None.");

  m.def(
      "enumerate",
      [](std::size_t max_vertices, std::size_t max_edges, std::size_t colors, bool reserved_io,
         const std::string& backend, std::size_t workers) {
        const EnumerationConfig config{max_vertices, max_edges, colors, reserved_io};
        std::vector<std::pair<std::string, ComputationalGraph>> out;
        enumerate(config, {parse_backend(backend), workers},
                  [&](const CanonicalRecord& r) { out.emplace_back(r.invariant.hex(), r.graph); });
        return out;
      },
      py::arg("max_vertices"), py::arg("max_edges"), py::arg("colors"),
      py::arg("reserved_io") = false, py::arg("backend") = "md5", py::arg("workers") = 1,
      "Returns (hex digest, representative graph) pairs in generation order.");

  m.def(
      "verify",
      [](std::size_t max_vertices, std::size_t max_edges, std::size_t colors, bool reserved_io,
         const std::string& backend) {
        const EnumerationConfig config{max_vertices, max_edges, colors, reserved_io};
        return verify_buckets(config, parse_backend(backend)).passed();
      },
      py::arg("max_vertices"), py::arg("max_edges"), py::arg("colors"),
      py::arg("reserved_io") = false, py::arg("backend") = "md5");

  m.def("figure2_pair", [](Color a, Color b) {
    AdversarialPair p = figure2_pair(a, b);
    return std::make_pair(p.first, p.second);
  }, py::arg("color_a") = 1, py::arg("color_b") = 2);
  m.def("bipartite_adversarial_pair", [](std::size_t degree, std::size_t size) {
    AdversarialPair p = bipartite_adversarial_pair(degree, size);
    return std::make_pair(p.first, p.second);
  }, py::arg("degree"), py::arg("size"));
}
