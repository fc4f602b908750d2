// selset: command line front end.
//
// Exit codes: 0 ok, 1 usage, 2 bad input file, 3 solver precondition
// failed, 4 a solver produced a subset that does not verify.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "selset/bench.hpp"
#include "selset/boundary.hpp"
#include "selset/error.hpp"
#include "selset/exact.hpp"
#include "selset/generate.hpp"
#include "selset/graph.hpp"
#include "selset/hardness.hpp"
#include "selset/interval_solver.hpp"
#include "selset/set_cover.hpp"
#include "selset/solve.hpp"

namespace fs = std::filesystem;
using namespace selset;

namespace {

constexpr int kExitUsage = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or stdout when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInput, "cannot write " + path);
  write(out);
}

// Errors from parsing carry the file name in front of the line number.
template <class Fn>
auto parse_file(const std::string& path, Fn&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(std::string_view(text));
  } catch (const FormatError& e) {
    throw Error(ErrorKind::kInput, path + ": " + e.what());
  }
}

ColoredGraph load_graph(const std::string& path) {
  return parse_file(path, [](std::string_view t) { return parse_graph(t); });
}

MonotoneCnf load_cnf(const std::string& path) {
  return parse_file(path, [](std::string_view t) { return parse_monotone_cnf(t); });
}

VertexMap load_map(const std::string& path) {
  return parse_file(path, [](std::string_view t) {
    std::istringstream in{std::string(t)};
    return parse_vertex_map(in);
  });
}

bool looks_like_intervals(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first, second;
    if (!(tokens >> first) || first[0] == '#') continue;
    tokens >> second;
    return first == "p" && second == "uim";
  }
  return false;
}

void require_same_graph(const ColoredGraph& a, const ColoredGraph& b) {
  const auto ca = a.colors();
  const auto cb = b.colors();
  const auto ea = a.edges();
  const auto eb = b.edges();
  const bool same = std::equal(ca.begin(), ca.end(), cb.begin(), cb.end()) &&
                    std::equal(ea.begin(), ea.end(), eb.begin(), eb.end(),
                               [](const Edge& x, const Edge& y) { return x.u == y.u && x.v == y.v; });
  if (!same) {
    throw PreconditionError(PreconditionErrc::kInvalidSpec, "graph does not match its interval representation");
  }
}

void verify_or_throw(const ColoredGraph& graph, const SelectiveSubset& subset) {
  const Selectivity check = is_selective(graph, subset.members);
  if (!check) {
    throw VerificationError(std::string(to_string(subset.method)) + " produced a non-selective subset (vertex " +
                            std::to_string(*check.witness + 1) + " unserved)");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string input;
  std::string cls = "auto";
  std::string intervals;
  std::string output;
  std::string setcover;
  Vertex root = 1;
  std::size_t max_block = 20;
  bool boundary_only = false;
};

void cmd_solve(const SolveArgs& args) {
  const std::string text = read_file(args.input);
  std::optional<UnitIntervalInstance> intervals;
  std::optional<ColoredGraph> graph;
  if (args.cls == "unit-interval" || looks_like_intervals(text)) {
    if (args.cls != "unit-interval" && args.cls != "auto") {
      throw PreconditionError(PreconditionErrc::kInvalidSpec, "interval file given to --class " + args.cls);
    }
    if (looks_like_intervals(text)) {
      intervals = parse_file(args.input, [](std::string_view t) { return parse_unit_intervals(t); });
      graph = build_interval_graph(*intervals);
    } else {
      if (args.intervals.empty()) {
        throw PreconditionError(PreconditionErrc::kInvalidSpec,
                                "--class unit-interval needs an interval file or --intervals <file>");
      }
      graph = load_graph(args.input);
      intervals = parse_file(args.intervals, [](std::string_view t) { return parse_unit_intervals(t); });
      require_same_graph(*graph, build_interval_graph(*intervals));
    }
  } else {
    graph = load_graph(args.input);
  }

  SolverKind kind = SolverKind::kGreedy;
  if (intervals) {
    kind = SolverKind::kInterval;
  } else if (args.cls == "auto") {
    kind = graph->is_tree() ? SolverKind::kTree : SolverKind::kGreedy;
  } else {
    kind = *parse_solver_kind(args.cls);
  }

  SolveOptions options;
  if (args.root == 0 || !graph->contains(args.root - 1)) {
    throw PreconditionError(PreconditionErrc::kInvalidVertex, "root " + std::to_string(args.root) + " out of range");
  }
  options.root = args.root - 1;
  options.oracle.max_block = args.max_block;
  options.oracle.search = args.boundary_only ? SearchSpace::kBoundaryOnly : SearchSpace::kFullBlock;

  if (!args.setcover.empty()) {
    emit(args.setcover, [&](std::ostream& out) { write_set_cover(out, to_set_cover(*graph)); });
  }

  const SelectiveSubset answer = solve(kind, *graph, intervals ? &*intervals : nullptr, options);
  verify_or_throw(*graph, answer);
  emit(args.output, [&](std::ostream& out) { write_subset(out, answer.members); });
  std::cerr << "size=" << answer.size() << " method=" << to_string(answer.method)
            << " blocks=" << block_lower_bound(*graph) << " verified=true\n";
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string solvers = "tree,interval,greedy";
  std::string kind = "random-tree";
  std::string sizes = "10000,100000,1000000";
  std::string dir;
  std::string output;
  std::size_t colors = 3;
  std::size_t seeds = 1;
  std::uint64_t seed = 1;
  std::size_t reps = 1;
  std::size_t max_block = 20;
  double p = 0.2;
  std::int64_t unit_length = 4;
  bool no_timing = false;
};

std::vector<BenchInstance> bench_from_dir(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchInstance> out;
  for (const fs::path& path : files) {
    const std::string text = read_file(path.string());
    if (looks_like_intervals(text)) {
      auto intervals = parse_file(path.string(), [](std::string_view t) { return parse_unit_intervals(t); });
      ColoredGraph graph = build_interval_graph(intervals);
      out.push_back({path.filename().string(), std::move(graph), std::move(intervals)});
    } else {
      out.push_back({path.filename().string(), load_graph(path.string()), std::nullopt});
    }
  }
  return out;
}

std::vector<BenchInstance> bench_generated(const BenchArgs& args) {
  const auto kind = parse_generator_kind(args.kind);
  if (!kind) throw PreconditionError(PreconditionErrc::kInvalidSpec, "unknown generator kind " + args.kind);
  std::vector<BenchInstance> out;
  for (const std::string& size_text : split_list(args.sizes)) {
    std::size_t n = 0;
    try {
      n = std::stoull(size_text);
    } catch (const std::exception&) {
      throw PreconditionError(PreconditionErrc::kInvalidSpec, "bad size " + size_text);
    }
    for (std::size_t s = 0; s < args.seeds; ++s) {
      const std::uint64_t seed = args.seed + s;
      const std::string id = args.kind + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
      switch (*kind) {
        case GeneratorKind::kRandomTree:
          out.push_back({id, random_tree(n, args.colors, seed), std::nullopt});
          break;
        case GeneratorKind::kRandomConnectedGraph:
          out.push_back({id, random_connected_graph(n, args.colors, args.p, seed), std::nullopt});
          break;
        case GeneratorKind::kRandomUnitInterval: {
          auto intervals = random_unit_interval(n, args.colors, args.unit_length, seed);
          ColoredGraph graph = build_interval_graph(intervals);
          out.push_back({id, std::move(graph), std::move(intervals)});
          break;
        }
      }
    }
  }
  return out;
}

void cmd_bench(const BenchArgs& args) {
  BenchOptions options;
  for (const std::string& name : split_list(args.solvers)) {
    const auto kind = parse_solver_kind(name);
    if (!kind) throw CLI::ValidationError("--solvers", "unknown solver " + name);
    options.solvers.push_back(*kind);
  }
  options.repetitions = args.reps;
  options.measure_time = !args.no_timing;
  options.solve.oracle.max_block = args.max_block;

  const std::vector<BenchInstance> instances =
      options.solvers.empty() ? std::vector<BenchInstance>{}
                              : (args.dir.empty() ? bench_generated(args) : bench_from_dir(args.dir));
  const BenchReport report = run_bench(instances, options);
  emit(args.output, [&](std::ostream& out) { write_bench_csv(out, report); });
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return 2;
    case ErrorKind::kPrecondition: return 3;
    case ErrorKind::kVerification: return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum selective subsets of vertex-colored graphs"};
  app.require_subcommand(1);

  // solve
  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a selective subset and print it");
  solve_cmd->add_option("input", solve_args.input, "Graph or interval file")->required();
  solve_cmd->add_option("--class", solve_args.cls, "Instance class")
      ->check(CLI::IsMember({"auto", "tree", "unit-interval", "general", "brute"}));
  solve_cmd->add_option("--root", solve_args.root, "Root vertex for the tree solver (1-based)");
  solve_cmd->add_option("--intervals", solve_args.intervals, "Interval representation of a graph input");
  solve_cmd->add_option("--max-block", solve_args.max_block, "Largest candidate set the brute oracle enumerates");
  solve_cmd->add_flag("--boundary-only", solve_args.boundary_only, "Brute oracle: search block balls only");
  solve_cmd->add_option("--emit-setcover", solve_args.setcover, "Also write the set cover instance here");
  solve_cmd->add_option("-o,--output", solve_args.output, "Subset file (default stdout)");
  solve_cmd->callback([&] { cmd_solve(solve_args); });

  // verify
  std::string verify_graph, verify_subset;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a subset is selective; exit 3 if not");
  verify_cmd->add_option("graph", verify_graph, "Graph file")->required();
  verify_cmd->add_option("subset", verify_subset, "Subset file")->required();
  int verify_status = 0;
  verify_cmd->callback([&] {
    const ColoredGraph graph = load_graph(verify_graph);
    const VertexSet subset = parse_file(verify_subset, [&](std::string_view t) {
      return parse_subset(t, graph.num_vertices());
    });
    const Selectivity check = is_selective(graph, subset);
    if (check) {
      std::cout << "selective=true size=" << subset.size() << '\n';
    } else {
      std::cout << "selective=false witness=" << *check.witness + 1 << '\n';
      verify_status = 3;
    }
  });

  // blocks
  std::string blocks_graph;
  auto* blocks_cmd = app.add_subcommand("blocks", "Print blocks with their boundary sets");
  blocks_cmd->add_option("graph", blocks_graph, "Graph file")->required();
  blocks_cmd->callback([&] {
    const ColoredGraph graph = load_graph(blocks_graph);
    const BlockDecomposition decomposition = decompose_blocks(graph);
    const auto parts = boundary_partitions(graph, decomposition);
    auto print = [](const char* name, const VertexSet& set) {
      std::cout << ' ' << name << '=';
      for (std::size_t i = 0; i < set.size(); ++i) std::cout << (i ? "," : "") << set[i] + 1;
    };
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Block& block = decomposition.blocks[i];
      std::cout << "block=" << block.id + 1 << " color=" << block.color + 1;
      print("members", block.members);
      print("b1", parts[i].b1);
      print("b2", parts[i].b2);
      std::cout << '\n';
    }
  });

  // reduce
  std::string reduce_cnf, reduce_out, reduce_map, reduce_colors = "two";
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the hardness graph of a monotone 3-CNF");
  reduce_cmd->add_option("cnf", reduce_cnf, "DIMACS file")->required();
  reduce_cmd->add_option("--out", reduce_out, "Graph file (default stdout)");
  reduce_cmd->add_option("--map", reduce_map, "Vertex map file");
  reduce_cmd->add_option("--clause-colors", reduce_colors, "Clause vertex coloring")
      ->check(CLI::IsMember({"two", "distinct"}));
  reduce_cmd->callback([&] {
    const MonotoneCnf cnf = load_cnf(reduce_cnf);
    const Reduction r =
        reduce_to_graph(cnf, reduce_colors == "distinct" ? ClauseColoring::kDistinct : ClauseColoring::kTwo);
    emit(reduce_out, [&](std::ostream& out) { write_graph(out, r.graph); });
    if (!reduce_map.empty()) emit(reduce_map, [&](std::ostream& out) { write_vertex_map(out, r.map); });
  });

  // assignment-to-subset
  std::string a2s_cnf, a2s_map, a2s_assignment, a2s_out;
  auto* a2s_cmd = app.add_subcommand("assignment-to-subset", "Map a satisfying assignment to a selective subset");
  a2s_cmd->add_option("cnf", a2s_cnf, "DIMACS file")->required();
  a2s_cmd->add_option("assignment", a2s_assignment, "Assignment file")->required();
  a2s_cmd->add_option("--map", a2s_map, "Vertex map file")->required();
  a2s_cmd->add_option("-o,--output", a2s_out, "Subset file (default stdout)");
  a2s_cmd->callback([&] {
    const MonotoneCnf cnf = load_cnf(a2s_cnf);
    const VertexMap map = load_map(a2s_map);
    const Assignment assignment = parse_file(a2s_assignment, [&](std::string_view t) {
      std::istringstream in{std::string(t)};
      return parse_assignment(in, cnf.num_vars);
    });
    const VertexSet subset = assignment_to_subset(cnf, assignment, map);
    emit(a2s_out, [&](std::ostream& out) { write_subset(out, subset); });
  });

  // subset-to-assignment
  std::string s2a_cnf, s2a_map, s2a_subset, s2a_graph, s2a_out;
  auto* s2a_cmd = app.add_subcommand("subset-to-assignment", "Read a satisfying assignment off a selective subset");
  s2a_cmd->add_option("cnf", s2a_cnf, "DIMACS file")->required();
  s2a_cmd->add_option("subset", s2a_subset, "Subset file")->required();
  s2a_cmd->add_option("--map", s2a_map, "Vertex map file")->required();
  s2a_cmd->add_option("--graph", s2a_graph, "Reduced graph (default: rebuilt from the formula)");
  s2a_cmd->add_option("-o,--output", s2a_out, "Assignment file (default stdout)");
  s2a_cmd->callback([&] {
    const MonotoneCnf cnf = load_cnf(s2a_cnf);
    const VertexMap map = load_map(s2a_map);
    const ColoredGraph graph = s2a_graph.empty() ? reduce_to_graph(cnf).graph : load_graph(s2a_graph);
    const VertexSet subset = parse_file(s2a_subset, [&](std::string_view t) {
      return parse_subset(t, graph.num_vertices());
    });
    const Assignment assignment = subset_to_assignment(graph, cnf, subset, map);
    emit(s2a_out, [&](std::ostream& out) { write_assignment(out, assignment); });
  });

  // gen
  GeneratorSpec spec;
  std::string gen_kind = "random-tree", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", gen_kind, "Instance family")
      ->check(CLI::IsMember({"random-tree", "random-unit-interval", "random-connected-graph"}));
  gen_cmd->add_option("--n", spec.n, "Vertices")->required();
  gen_cmd->add_option("--c", spec.c, "Colors")->required();
  gen_cmd->add_option("--seed", spec.seed, "Random seed");
  gen_cmd->add_option("--p", spec.edge_probability, "Extra edge probability (random-connected-graph)")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--unit-length", spec.unit_length, "Interval length and largest gap (random-unit-interval)");
  gen_cmd->add_option("-o,--output", gen_out, "Instance file (default stdout)");
  gen_cmd->callback([&] {
    spec.kind = *parse_generator_kind(gen_kind);
    const std::string text = generate(spec);
    emit(gen_out, [&](std::ostream& out) { out << text; });
  });

  // bench
  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run solvers over instances and write a CSV");
  bench_cmd->add_option("--solvers", bench_args.solvers, "Comma-separated: tree,interval,greedy,brute");
  bench_cmd->add_option("--dir", bench_args.dir, "Read instances from this directory instead of generating");
  bench_cmd->add_option("--kind", bench_args.kind, "Generated instance family");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Comma-separated vertex counts");
  bench_cmd->add_option("--c", bench_args.colors, "Colors per generated instance");
  bench_cmd->add_option("--seed", bench_args.seed, "First seed");
  bench_cmd->add_option("--seeds", bench_args.seeds, "Instances per size");
  bench_cmd->add_option("--p", bench_args.p, "Extra edge probability");
  bench_cmd->add_option("--unit-length", bench_args.unit_length, "Interval length");
  bench_cmd->add_option("--reps", bench_args.reps, "Timed repetitions; the median is reported");
  bench_cmd->add_option("--max-block", bench_args.max_block, "Brute oracle budget");
  bench_cmd->add_flag("--no-timing", bench_args.no_timing, "Write 0 in time_us (reproducible output)");
  bench_cmd->add_option("-o,--output", bench_args.output, "CSV file (default stdout)");
  bench_cmd->callback([&] { cmd_bench(bench_args); });

  // emit-setcover
  std::string sc_graph, sc_out;
  auto* sc_cmd = app.add_subcommand("emit-setcover", "Write the set cover instance of a graph");
  sc_cmd->add_option("graph", sc_graph, "Graph file")->required();
  sc_cmd->add_option("-o,--output", sc_out, "Output file (default stdout)");
  sc_cmd->callback([&] {
    const ColoredGraph graph = load_graph(sc_graph);
    emit(sc_out, [&](std::ostream& out) { write_set_cover(out, to_set_cover(graph)); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return verify_status;
}
