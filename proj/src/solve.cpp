#include "selset/solve.hpp"

#include "selset/error.hpp"
#include "selset/set_cover.hpp"
#include "selset/tree_solver.hpp"

namespace selset {

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kTree: return "tree";
    case SolverKind::kInterval: return "interval";
    case SolverKind::kGreedy: return "greedy";
    case SolverKind::kBrute: return "brute";
  }
  return "unknown";
}

std::optional<SolverKind> parse_solver_kind(std::string_view name) {
  if (name == "tree") return SolverKind::kTree;
  if (name == "interval" || name == "unit-interval") return SolverKind::kInterval;
  if (name == "greedy" || name == "general") return SolverKind::kGreedy;
  if (name == "brute") return SolverKind::kBrute;
  return std::nullopt;
}

SelectiveSubset solve(SolverKind kind, const ColoredGraph& graph, const UnitIntervalInstance* intervals,
                      const SolveOptions& options) {
  switch (kind) {
    case SolverKind::kTree:
      return solve_tree(graph, options.root);
    case SolverKind::kInterval:
      if (intervals == nullptr) {
        throw PreconditionError(PreconditionErrc::kInvalidSpec, "interval solver needs an interval representation");
      }
      return solve_unit_interval(*intervals);
    case SolverKind::kGreedy:
      return approx_mss(graph);
    case SolverKind::kBrute:
      return exact_mss(graph, options.oracle);
  }
  throw PreconditionError(PreconditionErrc::kInvalidSpec, "unknown solver");
}

}  // namespace selset
