#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "selset/graph.hpp"

namespace selset {

// A 3-literal clause whose literals are all positive or all negative.
struct Clause {
  std::array<std::uint32_t, 3> vars{};  // 0-based variable indices, pairwise distinct
  bool positive = true;
};

struct MonotoneCnf {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
};

using Assignment = std::vector<bool>;  // one truth value per variable

// Throws FormatError if a clause repeats a variable or names one out of range.
void validate(const MonotoneCnf& cnf);
bool satisfies(const MonotoneCnf& cnf, const Assignment& assignment);

// DIMACS: "p cnf <n> <m>", clauses terminated by 0, 'c' comment lines.
// Every clause must have exactly three literals of one polarity.
MonotoneCnf parse_monotone_cnf(std::istream& in);
MonotoneCnf parse_monotone_cnf(std::string_view text);
void write_cnf(std::ostream& out, const MonotoneCnf& cnf);

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;

// Gadget vertex ids. Variable i (0-based) owns 6i..6i+5 in the order
// x1 x2 x3 nx1 nx2 nx3; clause j owns 6n+3j..6n+3j+2 in the order c1 c2 c3.
struct VariableGadget {
  std::array<Vertex, 3> positive{};
  std::array<Vertex, 3> negative{};

  bool operator==(const VariableGadget&) const = default;
};

struct VertexMap {
  std::vector<VariableGadget> variables;
  std::vector<std::array<Vertex, 3>> clauses;

  bool operator==(const VertexMap&) const = default;
};

enum class ClauseColoring {
  kTwo,       // c1, c2 red
  kDistinct,  // c1, c2 of clause j get their own color 2 + j
};

struct Reduction {
  ColoredGraph graph;
  VertexMap map;
};

VertexMap make_vertex_map(std::size_t num_vars, std::size_t num_clauses);

// Two-colored graph with 6n + 3m vertices and 8n + 5m edges whose minimum
// selective subset has size 2n + m exactly when the formula is satisfiable.
// Planarity of the result is not checked. Throws FormatError(kDisconnected)
// when some variable occurs in no clause or the clauses split into
// independent groups.
Reduction reduce_to_graph(const MonotoneCnf& cnf, ClauseColoring coloring = ClauseColoring::kTwo);

// x_i true -> {x_i1, x_i3}, false -> {nx_i1, nx_i3}; plus c_j1 per clause.
// Throws PreconditionError(kUnsatisfied) if the assignment fails the formula.
VertexSet assignment_to_subset(const MonotoneCnf& cnf, const Assignment& assignment, const VertexMap& map);

// Inverse of assignment_to_subset. The subset must be selective, of size
// 2n + m, and pick one red anchor and one third-path vertex per variable
// plus one of c_j1, c_j2 per clause; x_i is true iff x_i3 was picked.
Assignment subset_to_assignment(const ColoredGraph& graph, const MonotoneCnf& cnf, std::span<const Vertex> subset,
                                const VertexMap& map);

//   x <i> <id1> <id2> <id3>  /  nx <i> ...  /  c <j> ...     (all 1-based)
void write_vertex_map(std::ostream& out, const VertexMap& map);
VertexMap parse_vertex_map(std::istream& in);

// Assignment file: one signed literal per variable ("1 -2 3"), any order.
void write_assignment(std::ostream& out, const Assignment& assignment);
Assignment parse_assignment(std::istream& in, std::size_t num_vars);

}  // namespace selset
