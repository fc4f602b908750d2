#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "selset/boundary.hpp"
#include "selset/error.hpp"
#include "selset/exact.hpp"
#include "selset/generate.hpp"
#include "selset/graph.hpp"
#include "selset/hardness.hpp"
#include "selset/interval_solver.hpp"
#include "selset/set_cover.hpp"
#include "selset/solve.hpp"
#include "selset/tree_solver.hpp"

namespace py = pybind11;
using namespace selset;

namespace {

template <class Write, class T>
std::string to_text(Write write, const T& value) {
  std::ostringstream out;
  write(out, value);
  return out.str();
}

ColoredGraph make_graph(std::vector<Color> colors, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return ColoredGraph(std::move(colors), list);
}

}  // namespace

PYBIND11_MODULE(_selset, m) {
  m.doc() = "Minimum selective subsets of vertex-colored graphs (0-based ids).";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());

  py::class_<ColoredGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("colors"), py::arg("edges"))
      .def_property_readonly("num_vertices", &ColoredGraph::num_vertices)
      .def_property_readonly("num_edges", &ColoredGraph::num_edges)
      .def_property_readonly("num_colors", &ColoredGraph::num_colors)
      .def_property_readonly("colors",
                             [](const ColoredGraph& g) { return std::vector<Color>(g.colors().begin(), g.colors().end()); })
      .def("neighbors",
           [](const ColoredGraph& g, Vertex v) {
             if (!g.contains(v)) throw py::index_error("vertex out of range");
             auto span = g.neighbors(v);
             return std::vector<Vertex>(span.begin(), span.end());
           })
      .def("edges",
           [](const ColoredGraph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("is_tree", &ColoredGraph::is_tree)
      .def("to_text", [](const ColoredGraph& g) { return to_text(&write_graph, g); });

  m.def("parse_graph", py::overload_cast<std::string_view>(&parse_graph), py::arg("text"));

  py::class_<UnitIntervalInstance>(m, "UnitIntervals")
      .def_readonly("unit_length", &UnitIntervalInstance::unit_length)
      .def_property_readonly("lefts",
                             [](const UnitIntervalInstance& u) {
                               std::vector<std::int64_t> out;
                               for (const Interval& i : u.intervals) out.push_back(i.left);
                               return out;
                             })
      .def("graph", &build_interval_graph)
      .def("to_text", [](const UnitIntervalInstance& u) { return to_text(&write_unit_intervals, u); });
  m.def("parse_unit_intervals", py::overload_cast<std::string_view>(&parse_unit_intervals), py::arg("text"));

  m.def("blocks", [](const ColoredGraph& g) {
    std::vector<VertexSet> out;
    for (const Block& b : blocks(g)) out.push_back(b.members);
    return out;
  });
  m.def("boundary", [](const ColoredGraph& g) {
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (const BoundaryPartition& p : boundary_partitions(g, decompose_blocks(g))) out.emplace_back(p.b1, p.b2);
    return out;
  }, "Per block, the pair (b1, b2).");
  m.def("is_selective", [](const ColoredGraph& g, const std::vector<Vertex>& subset) {
    return is_selective(g, make_vertex_set(g, subset)).selective;
  });
  m.def("lower_bound", &block_lower_bound);

  m.def(
      "solve",
      [](const ColoredGraph& g, const std::string& method, Vertex root, std::size_t max_block) {
        const auto kind = parse_solver_kind(method);
        if (!kind || *kind == SolverKind::kInterval) throw py::value_error("method must be tree, greedy or brute");
        SolveOptions options;
        options.root = root;
        options.oracle.max_block = max_block;
        return solve(*kind, g, nullptr, options).members;
      },
      py::arg("graph"), py::arg("method") = "greedy", py::arg("root") = 0, py::arg("max_block") = 20);
  m.def("solve_intervals", [](const UnitIntervalInstance& u) { return solve_unit_interval(u).members; });

  m.def("set_cover_text", [](const ColoredGraph& g) { return to_text(&write_set_cover, to_set_cover(g)); });

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::size_t c, std::uint64_t seed, double p, std::int64_t unit_length) {
        const auto parsed = parse_generator_kind(kind);
        if (!parsed) throw py::value_error("unknown generator kind: " + kind);
        return generate({*parsed, n, c, seed, p, unit_length});
      },
      py::arg("kind"), py::arg("n"), py::arg("c"), py::arg("seed") = 0, py::arg("p") = 0.2, py::arg("unit_length") = 4);

  m.def(
      "reduce_cnf",
      [](const std::string& dimacs) {
        const MonotoneCnf cnf = parse_monotone_cnf(std::string_view(dimacs));
        Reduction r = reduce_to_graph(cnf);
        return py::make_tuple(std::move(r.graph), to_text(&write_vertex_map, r.map));
      },
      "Graph and vertex-map text for a monotone 3-CNF in DIMACS form.");
  m.def("assignment_to_subset", [](const std::string& dimacs, const std::vector<bool>& assignment) {
    const MonotoneCnf cnf = parse_monotone_cnf(std::string_view(dimacs));
    return assignment_to_subset(cnf, assignment, make_vertex_map(cnf.num_vars, cnf.clauses.size()));
  });
  m.def("subset_to_assignment", [](const std::string& dimacs, const std::vector<Vertex>& subset) {
    const MonotoneCnf cnf = parse_monotone_cnf(std::string_view(dimacs));
    const Reduction r = reduce_to_graph(cnf);
    return subset_to_assignment(r.graph, cnf, subset, r.map);
  });
}
