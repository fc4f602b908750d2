#pragma once

#include <optional>
#include <string_view>

#include "selset/exact.hpp"
#include "selset/graph.hpp"
#include "selset/interval_solver.hpp"

namespace selset {

enum class SolverKind { kTree, kInterval, kGreedy, kBrute };

// "tree", "interval", "greedy", "brute": the same tags as Method.
std::string_view to_string(SolverKind kind);
// Also accepts the CLI class names "unit-interval" and "general".
std::optional<SolverKind> parse_solver_kind(std::string_view name);

struct SolveOptions {
  Vertex root = 0;
  OracleConfig oracle;
};

// Runs one solver. Interval solving needs the interval representation;
// without it PreconditionError(kInvalidSpec) is thrown.
SelectiveSubset solve(SolverKind kind, const ColoredGraph& graph, const UnitIntervalInstance* intervals,
                      const SolveOptions& options = {});

}  // namespace selset
