#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selset/graph.hpp"
#include "selset/interval_solver.hpp"
#include "selset/solve.hpp"

namespace selset {

struct BenchInstance {
  std::string id;
  ColoredGraph graph;
  std::optional<UnitIntervalInstance> intervals;
};

struct BenchRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t c = 0;
  SolverKind solver = SolverKind::kTree;
  std::size_t size = 0;
  std::size_t lower_bound = 0;
  std::int64_t time_us = 0;  // median over repetitions; 0 when timing is off
  bool verified = false;
};

struct SkippedRun {
  std::string instance;
  SolverKind solver = SolverKind::kTree;
  std::string reason;
};

struct BenchOptions {
  std::vector<SolverKind> solvers;
  std::size_t repetitions = 1;
  bool measure_time = true;
  SolveOptions solve;
};

struct BenchReport {
  std::vector<BenchRecord> records;  // sorted by instance id, then solver tag
  std::vector<SkippedRun> skipped;
};

// Runs every solver on every instance and verifies each answer. Runs whose
// precondition fails (tree solver on a cyclic graph, say) are reported in
// `skipped`; a failed verification throws VerificationError.
BenchReport run_bench(std::span<const BenchInstance> instances, const BenchOptions& options);

struct ScalingFit {
  SolverKind solver = SolverKind::kTree;
  double slope = 0.0;
  std::size_t points = 0;
};

// Least-squares slope of log(time) against log(n), one fit per solver with
// at least two distinct sizes. Times for equal n are averaged first.
std::vector<ScalingFit> fit_scaling(const BenchReport& report);

// Header
//   instance,n,m,c,solver,size,lower_bound,time_us,verified
// then one row per record, then '#'-prefixed skipped-run and scaling lines.
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace selset
