// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "selset/bench.hpp"
#include "selset/error.hpp"
#include "selset/exact.hpp"
#include "selset/generate.hpp"
#include "selset/hardness.hpp"
#include "selset/interval_solver.hpp"
#include "selset/set_cover.hpp"
#include "selset/tree_solver.hpp"

using namespace selset;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << o.detail << ")"
            << std::endl;
  if (!o.pass) ++failures;
}

// Lower-bound tally shared by every suite.
struct BoundTally {
  std::size_t checks = 0;
  std::size_t violations = 0;

  void check(const ColoredGraph& g, const SelectiveSubset& s) {
    ++checks;
    if (block_lower_bound(g) > s.size()) ++violations;
  }
};
BoundTally bound_tally;

std::string fmt(double x, int digits = 3) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

// ------------------------------------------------------------------ 1, 2

Outcome oracle_trees() {
  const auto start = Clock::now();
  std::size_t count = 0, mismatches = 0, unverified = 0;
  for (std::uint64_t seed = 1; count < 1000; ++seed) {
    const std::size_t n = 4 + seed % 11;
    const std::size_t c = 2 + (seed / 11) % 3;
    const ColoredGraph g = random_tree(n, c, seed);
    const SelectiveSubset fast = solve_tree(g, static_cast<Vertex>(seed % n));
    const SelectiveSubset exact = exact_mss(g);
    if (fast.size() != exact.size()) ++mismatches;
    if (!is_selective(g, fast.members) || !is_selective(g, exact.members)) ++unverified;
    bound_tally.check(g, fast);
    bound_tally.check(g, exact);
    ++count;
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && unverified == 0 && secs < 30,
          std::to_string(count) + " trees, " + std::to_string(mismatches) + " size mismatches, " +
              std::to_string(unverified) + " unverified, " + fmt(secs, 2) + " s"};
}

Outcome oracle_intervals() {
  const auto start = Clock::now();
  std::size_t count = 0, mismatches = 0, unverified = 0;
  for (std::uint64_t seed = 1; count < 1000; ++seed) {
    const std::size_t n = 1 + seed % 14;
    const std::size_t c = std::min<std::size_t>(n, 1 + (seed / 14) % 4);
    const std::int64_t unit = 1 + static_cast<std::int64_t>((seed / 56) % 5);
    const UnitIntervalInstance inst = random_unit_interval(n, c, unit, seed);
    const ColoredGraph g = build_interval_graph(inst);
    const SelectiveSubset fast = solve_unit_interval(inst);
    const SelectiveSubset exact = exact_mss(g);
    if (fast.size() != exact.size()) ++mismatches;
    if (!is_selective(g, fast.members) || !is_selective(g, exact.members)) ++unverified;
    bound_tally.check(g, fast);
    bound_tally.check(g, exact);
    ++count;
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && unverified == 0 && secs < 30,
          std::to_string(count) + " interval instances, " + std::to_string(mismatches) + " size mismatches, " +
              std::to_string(unverified) + " unverified, " + fmt(secs, 2) + " s"};
}

// ------------------------------------------------------------------ 4, 5

struct GeneralSuite {
  std::size_t graphs = 0;
  std::size_t greedy_failures = 0;
  std::size_t optimum_failures = 0;
  std::size_t ratio_violations = 0;
  double max_ratio = 0;
};

GeneralSuite general_suite() {
  GeneralSuite s;
  for (std::uint64_t seed = 1; s.graphs < 200; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const std::size_t c = std::min<std::size_t>(n, 2 + seed % 3);
    const double p = 0.1 + 0.1 * static_cast<double>(seed % 4);
    const ColoredGraph g = random_connected_graph(n, c, p, seed);
    ++s.graphs;

    // Greedy cover, mapped to vertices, must be selective.
    const SetCoverInstance inst = to_set_cover(g);
    const std::vector<std::size_t> cover = greedy_set_cover(inst);
    VertexSet from_cover;
    for (std::size_t k : cover) from_cover.push_back(inst.sets[k].source);
    std::sort(from_cover.begin(), from_cover.end());
    const SelectiveSubset approx = approx_mss(g);
    if (!is_cover(inst, cover) || !is_selective(g, from_cover) || approx.members != from_cover) ++s.greedy_failures;

    // An optimum restricted to the balls names sets that cover.
    const SelectiveSubset exact = exact_mss(g);
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < inst.sets.size(); ++k) {
      if (std::binary_search(exact.members.begin(), exact.members.end(), inst.sets[k].source)) chosen.push_back(k);
    }
    if (!is_selective(g, exact.members) || !is_cover(inst, chosen)) ++s.optimum_failures;

    const double ratio = static_cast<double>(approx.size()) / static_cast<double>(exact.size());
    s.max_ratio = std::max(s.max_ratio, ratio);
    if (ratio > std::log(static_cast<double>(n)) + 1) ++s.ratio_violations;

    bound_tally.check(g, approx);
    bound_tally.check(g, exact);
  }
  return s;
}

// ------------------------------------------------------------------ 6, 7

MonotoneCnf six_clause_formula() {
  return parse_monotone_cnf("p cnf 6 6\n1 2 3 0\n1 3 4 0\n4 5 6 0\n-1 -3 -4 0\n-1 -4 -6 0\n-4 -5 -6 0\n");
}

// Every multiset of m clauses over n variables, each clause a 3-subset of
// the variables with a polarity.
std::vector<MonotoneCnf> all_formulas(std::size_t n, std::size_t m) {
  std::vector<Clause> kinds;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t c = b + 1; c < n; ++c) {
        kinds.push_back({{a, b, c}, true});
        kinds.push_back({{a, b, c}, false});
      }
  std::vector<MonotoneCnf> out;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    MonotoneCnf cnf{n, {}};
    for (std::size_t k : pick) cnf.clauses.push_back(kinds[k]);
    out.push_back(std::move(cnf));
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == kinds.size() - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[i - 1];
  }
  return out;
}

struct CountSuite {
  std::size_t formulas = 0;
  std::size_t violations = 0;
  std::string six_clause;
};

void count_check(CountSuite& s, const MonotoneCnf& cnf) {
  for (ClauseColoring coloring : {ClauseColoring::kTwo, ClauseColoring::kDistinct}) {
    const Reduction r = reduce_to_graph(cnf, coloring);
    const std::size_t n = cnf.num_vars, m = cnf.clauses.size();
    if (r.graph.num_vertices() != 6 * n + 3 * m || r.graph.num_edges() != 8 * n + 5 * m) ++s.violations;
  }
  ++s.formulas;
}

struct HardnessSuite {
  std::size_t enumerated = 0;
  std::size_t connected = 0;
  std::size_t satisfiable = 0;
  std::size_t unsatisfiable = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::size_t largest_block = 0;
  double seconds = 0;
  std::string beyond;  // unsatisfiable formula outside the enumerated range
  bool beyond_ok = false;
};

bool correspondence_holds(const MonotoneCnf& cnf, std::size_t budget, HardnessSuite& s) {
  const Reduction r = reduce_to_graph(cnf);
  for (const Block& b : blocks(r.graph)) s.largest_block = std::max(s.largest_block, b.members.size());
  const bool sat = oracle::brute_sat(cnf).has_value();
  const SelectiveSubset opt = exact_mss(r.graph, {budget, SearchSpace::kFullBlock});
  bound_tally.check(r.graph, opt);
  const std::size_t target = 2 * cnf.num_vars + cnf.clauses.size();
  if (!is_selective(r.graph, opt.members)) return false;
  if (!sat) return opt.size() > target;
  if (opt.size() != target) return false;
  // The optimum decodes to a satisfying assignment, and the assignment
  // maps back to a selective subset of the same size.
  const Assignment a = subset_to_assignment(r.graph, cnf, opt.members, r.map);
  const VertexSet back = assignment_to_subset(cnf, a, r.map);
  return satisfies(cnf, a) && back.size() == target && is_selective(r.graph, back);
}

HardnessSuite hardness_suite(CountSuite& counts) {
  HardnessSuite s;
  const auto start = Clock::now();
  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (const MonotoneCnf& cnf : all_formulas(n, m)) {
        ++s.enumerated;
        if (!oracle::reduction_connected(cnf)) continue;
        ++s.connected;
        count_check(counts, cnf);
        (oracle::brute_sat(cnf) ? s.satisfiable : s.unsatisfiable)++;
        try {
          if (!correspondence_holds(cnf, 20, s)) ++s.violations;
        } catch (const PreconditionError& e) {
          if (e.code() != PreconditionErrc::kBudgetExceeded) throw;
          ++s.skipped;
        }
      }
    }
  }
  s.seconds = seconds_since(start);

  // No monotone formula with four or fewer variables is unsatisfiable, so
  // the strict inequality is also checked on one with five: every positive
  // and every negative triple.
  MonotoneCnf five{5, {}};
  for (const MonotoneCnf& one : all_formulas(5, 1)) five.clauses.push_back(one.clauses[0]);
  HardnessSuite scratch;
  s.beyond_ok = !oracle::brute_sat(five) && correspondence_holds(five, 64, scratch);
  s.beyond = "n=5 m=" + std::to_string(five.clauses.size()) + " unsatisfiable formula " +
             (s.beyond_ok ? "exceeds" : "does not exceed") + " 2n+m";
  count_check(counts, five);
  return s;
}

// ------------------------------------------------------------------ 8

Outcome nine_set_cover() {
  SetCoverInstance inst;
  inst.element_source = {0, 1, 2, 3, 4};
  const std::vector<std::vector<std::uint32_t>> sets = {{0}, {1, 2}, {1, 2}, {3}, {4}, {0, 1, 2}, {3}, {4}, {3, 4}};
  for (std::size_t k = 0; k < sets.size(); ++k) inst.sets.push_back({static_cast<Vertex>(k), sets[k]});
  const auto chosen = greedy_set_cover(inst);
  std::string names;
  for (std::size_t k : chosen) names += (names.empty() ? "S" : ",S") + std::to_string(k + 1);
  return {chosen == std::vector<std::size_t>{5, 8}, "picked {" + names + "}"};
}

// ------------------------------------------------------------------ 9

Outcome linear_time() {
  std::vector<BenchInstance> trees, intervals;
  for (std::size_t n : {10'000u, 100'000u, 1'000'000u}) {
    trees.push_back({"tree-" + std::to_string(n), random_tree(n, 3, n), std::nullopt});
    UnitIntervalInstance inst = random_unit_interval(n, 3, 4, n);
    ColoredGraph g = build_interval_graph(inst);
    intervals.push_back({"interval-" + std::to_string(n), std::move(g), std::move(inst)});
  }
  BenchOptions tree_options;
  tree_options.solvers = {SolverKind::kTree};
  tree_options.repetitions = 5;
  BenchOptions interval_options = tree_options;
  interval_options.solvers = {SolverKind::kInterval};

  const BenchReport tree_report = run_bench(trees, tree_options);
  const BenchReport interval_report = run_bench(intervals, interval_options);
  for (const BenchReport* r : {&tree_report, &interval_report}) {
    for (const BenchRecord& rec : r->records) {
      ++bound_tally.checks;
      if (rec.size < rec.lower_bound) ++bound_tally.violations;
    }
  }
  const auto tree_fit = fit_scaling(tree_report);
  const auto interval_fit = fit_scaling(interval_report);
  if (tree_fit.size() != 1 || interval_fit.size() != 1 || tree_report.records.size() != 3 ||
      interval_report.records.size() != 3) {
    return {false, "missing bench records"};
  }
  std::int64_t largest_us = 0;
  for (const BenchRecord& rec : tree_report.records) {
    if (rec.n == 1'000'000) largest_us = rec.time_us;
  }
  const double largest_s = static_cast<double>(largest_us) / 1e6;
  const bool pass = tree_fit[0].slope <= 1.2 && interval_fit[0].slope <= 1.2 && largest_s < 5.0;
  return {pass, "tree slope " + fmt(tree_fit[0].slope) + ", interval slope " + fmt(interval_fit[0].slope) +
                    ", tree n=1e6 in " + fmt(largest_s) + " s"};
}

// ------------------------------------------------------------------ 10

// Everything a seeded run writes: instance files, subset files, CSVs.
std::string seeded_outputs() {
  std::ostringstream out;
  std::vector<BenchInstance> instances;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const GeneratorKind kind = seed % 3 == 0   ? GeneratorKind::kRandomTree
                               : seed % 3 == 1 ? GeneratorKind::kRandomUnitInterval
                                               : GeneratorKind::kRandomConnectedGraph;
    const std::string text = generate({kind, n, 3, seed, 0.3, 3});
    out << text;
    const std::string id = std::string(to_string(kind)) + "-" + std::to_string(seed);
    if (kind == GeneratorKind::kRandomUnitInterval) {
      UnitIntervalInstance inst = parse_unit_intervals(text);
      ColoredGraph g = build_interval_graph(inst);
      write_subset(out, solve_unit_interval(inst).members);
      instances.push_back({id, std::move(g), std::move(inst)});
    } else {
      ColoredGraph g = parse_graph(text);
      if (g.is_tree()) write_subset(out, solve_tree(g).members);
      write_subset(out, approx_mss(g).members);
      write_subset(out, exact_mss(g).members);
      instances.push_back({id, std::move(g), std::nullopt});
    }
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    oracle::SplitMix rng(seed);
    MonotoneCnf cnf = oracle::random_cnf(6, 8, rng);
    if (!oracle::reduction_connected(cnf)) continue;
    const Reduction r = reduce_to_graph(cnf);
    write_graph(out, r.graph);
    write_vertex_map(out, r.map);
    if (const auto a = oracle::brute_sat(cnf)) write_subset(out, assignment_to_subset(cnf, *a, r.map));
  }
  BenchOptions options;
  options.solvers = {SolverKind::kTree, SolverKind::kInterval, SolverKind::kGreedy, SolverKind::kBrute};
  options.measure_time = false;
  write_bench_csv(out, run_bench(instances, options));
  return out.str();
}

Outcome determinism() {
  const std::string first = seeded_outputs();
  const std::string second = seeded_outputs();
  return {first == second && !first.empty(),
          std::to_string(first.size()) + " bytes per run, " + (first == second ? "identical" : "different")};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  // Criterion 3 tallies every suite, so all run before anything prints.
  std::vector<std::pair<std::string, Outcome>> results(11);
  try {
    results[1] = {"tree solver matches exact oracle", oracle_trees()};
    results[2] = {"unit interval solver matches exact oracle", oracle_intervals()};

    const GeneralSuite general = general_suite();
    results[4] = {"set cover correspondence both ways",
                  {general.greedy_failures == 0 && general.optimum_failures == 0,
                   std::to_string(general.graphs) + " graphs, " + std::to_string(general.greedy_failures) +
                       " greedy failures, " + std::to_string(general.optimum_failures) + " optimum failures"}};
    results[5] = {"greedy within (ln n + 1) of optimum",
                  {general.ratio_violations == 0, std::to_string(general.graphs) + " graphs, max ratio " +
                                                      fmt(general.max_ratio) + ", " +
                                                      std::to_string(general.ratio_violations) + " violations"}};

    CountSuite counts;
    const HardnessSuite hardness = hardness_suite(counts);
    results[7] = {"satisfiable iff minimum is 2n+m",
                  {hardness.violations == 0 && hardness.beyond_ok,
                   std::to_string(hardness.connected) + " connected formulas of " +
                       std::to_string(hardness.enumerated) + " enumerated (n<=4, m<=4): " +
                       std::to_string(hardness.satisfiable) + " sat, " + std::to_string(hardness.unsatisfiable) +
                       " unsat, " + std::to_string(hardness.skipped) + " skipped over budget, " +
                       std::to_string(hardness.violations) + " violations, largest block " +
                       std::to_string(hardness.largest_block) + ", " + fmt(hardness.seconds, 2) + " s; " +
                       hardness.beyond}};

    count_check(counts, six_clause_formula());
    const Reduction six = reduce_to_graph(six_clause_formula());
    const bool six_ok = six.graph.num_vertices() == 54 && six.graph.num_edges() == 78;
    oracle::SplitMix rng(2024);
    for (int k = 0; k < 300; ++k) {
      const MonotoneCnf cnf = oracle::random_cnf(3 + rng.below(18), 1 + rng.below(25), rng);
      if (oracle::reduction_connected(cnf)) count_check(counts, cnf);
    }
    results[6] = {"reduced graphs have 6n+3m vertices and 8n+5m edges",
                  {counts.violations == 0 && six_ok,
                   std::to_string(counts.formulas) + " formulas, " + std::to_string(counts.violations) +
                       " violations, six-clause formula " + std::to_string(six.graph.num_vertices()) +
                       " vertices / " + std::to_string(six.graph.num_edges()) + " edges"}};

    results[8] = {"greedy set cover on the nine-set fixture", nine_set_cover()};
    results[9] = {"linear-time scaling", linear_time()};
    results[10] = {"seeded runs are byte-identical", determinism()};
    results[3] = {"block count never exceeds solution size",
                  {bound_tally.violations == 0, std::to_string(bound_tally.checks) + " solutions checked, " +
                                                    std::to_string(bound_tally.violations) + " violations"}};
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance suite aborted: " << e.what() << std::endl;
    return 1;
  }
  for (int id = 1; id <= 10; ++id) report(id, results[id].first, results[id].second);
  std::cout << "total " << fmt(seconds_since(start), 1) << " s, " << failures << " failing criteria" << std::endl;
  return failures == 0 ? 0 : 1;
}
