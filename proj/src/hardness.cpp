#include "selset/hardness.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "selset/error.hpp"
#include "text.hpp"

namespace selset {

namespace {

void validate_clause(const Clause& clause, std::size_t num_vars, std::size_t line) {
  for (std::uint32_t v : clause.vars) {
    if (v >= num_vars) {
      throw FormatError(FormatErrc::kVariableOutOfRange, line,
                        "variable " + std::to_string(v + 1) + " outside 1.." + std::to_string(num_vars));
    }
  }
  const auto& x = clause.vars;
  if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) {
    throw FormatError(FormatErrc::kRepeatedVariable, line, "");
  }
}

}  // namespace

void validate(const MonotoneCnf& cnf) {
  for (const Clause& clause : cnf.clauses) validate_clause(clause, cnf.num_vars, 0);
}

bool satisfies(const MonotoneCnf& cnf, const Assignment& assignment) {
  if (assignment.size() != cnf.num_vars) return false;
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& clause) {
    return std::any_of(clause.vars.begin(), clause.vars.end(),
                       [&](std::uint32_t v) { return assignment[v] == clause.positive; });
  });
}

MonotoneCnf parse_monotone_cnf(std::istream& in) {
  detail::LineReader reader(in, 'c');
  detail::Line line;
  if (!reader.next(line)) {
    throw FormatError(FormatErrc::kMalformedLine, reader.line_number(), "missing 'p cnf' header");
  }
  if (line.tokens.size() != 4 || line.tokens[0] != "p" || line.tokens[1] != "cnf") {
    throw FormatError(FormatErrc::kMalformedLine, line.number, "expected 'p cnf <n> <m>'");
  }
  MonotoneCnf cnf;
  cnf.num_vars = detail::parse_number<std::size_t>(line.tokens[2], line.number);
  const auto declared = detail::parse_number<std::size_t>(line.tokens[3], line.number);

  std::vector<long long> literals;
  std::size_t clause_line = 0;
  while (reader.next(line)) {
    if (line.tokens[0] == "%") break;
    for (const std::string& token : line.tokens) {
      const auto lit = detail::parse_number<long long>(token, line.number);
      if (literals.empty()) clause_line = line.number;
      if (lit != 0) {
        literals.push_back(lit);
        continue;
      }
      if (literals.size() != 3) {
        throw FormatError(FormatErrc::kClauseSize, clause_line,
                          "clause has " + std::to_string(literals.size()) + " literals");
      }
      const bool positive = literals[0] > 0;
      Clause clause;
      clause.positive = positive;
      for (std::size_t i = 0; i < 3; ++i) {
        if ((literals[i] > 0) != positive) throw FormatError(FormatErrc::kMixedPolarity, clause_line, "");
        const long long var = literals[i] > 0 ? literals[i] : -literals[i];
        if (var > static_cast<long long>(cnf.num_vars)) {
          throw FormatError(FormatErrc::kVariableOutOfRange, clause_line,
                            "variable " + std::to_string(var) + " outside 1.." + std::to_string(cnf.num_vars));
        }
        clause.vars[i] = static_cast<std::uint32_t>(var - 1);
      }
      validate_clause(clause, cnf.num_vars, clause_line);
      cnf.clauses.push_back(clause);
      literals.clear();
    }
  }
  if (!literals.empty()) {
    throw FormatError(FormatErrc::kMalformedLine, clause_line, "last clause is not terminated by 0");
  }
  if (cnf.clauses.size() != declared) {
    throw FormatError(FormatErrc::kCountMismatch, 0,
                      "declared " + std::to_string(declared) + " clauses, found " +
                          std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

MonotoneCnf parse_monotone_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_monotone_cnf(in);
}

void write_cnf(std::ostream& out, const MonotoneCnf& cnf) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const Clause& clause : cnf.clauses) {
    for (std::uint32_t v : clause.vars) out << (clause.positive ? "" : "-") << v + 1 << ' ';
    out << "0\n";
  }
}

VertexMap make_vertex_map(std::size_t num_vars, std::size_t num_clauses) {
  VertexMap map;
  map.variables.resize(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    const auto base = static_cast<Vertex>(6 * i);
    map.variables[i].positive = {base, base + 1, base + 2};
    map.variables[i].negative = {base + 3, base + 4, base + 5};
  }
  map.clauses.resize(num_clauses);
  for (std::size_t j = 0; j < num_clauses; ++j) {
    const auto base = static_cast<Vertex>(6 * num_vars + 3 * j);
    map.clauses[j] = {base, base + 1, base + 2};
  }
  return map;
}

Reduction reduce_to_graph(const MonotoneCnf& cnf, ClauseColoring coloring) {
  validate(cnf);
  const std::size_t n = cnf.num_vars;
  const std::size_t m = cnf.clauses.size();
  VertexMap map = make_vertex_map(n, m);

  std::vector<Color> colors(6 * n + 3 * m, kBlue);
  std::vector<Edge> edges;
  edges.reserve(8 * n + 5 * m);
  for (const VariableGadget& g : map.variables) {
    const auto& x = g.positive;
    const auto& nx = g.negative;
    colors[x[0]] = kRed;
    colors[nx[0]] = kRed;
    edges.push_back({x[0], x[1]});
    edges.push_back({x[1], x[2]});
    edges.push_back({nx[0], nx[1]});
    edges.push_back({nx[1], nx[2]});
    edges.push_back({x[0], nx[0]});
    edges.push_back({x[1], nx[2]});
    edges.push_back({x[2], nx[1]});
    edges.push_back({x[2], nx[2]});
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = map.clauses[j];
    const Color pair = coloring == ClauseColoring::kDistinct ? static_cast<Color>(2 + j) : kRed;
    colors[c[0]] = pair;
    colors[c[1]] = pair;
    edges.push_back({c[0], c[1]});
    edges.push_back({c[1], c[2]});
    const Clause& clause = cnf.clauses[j];
    for (std::uint32_t v : clause.vars) {
      const auto& gadget = map.variables[v];
      edges.push_back({c[2], clause.positive ? gadget.positive[2] : gadget.negative[2]});
    }
  }

  try {
    return Reduction{ColoredGraph(std::move(colors), edges), std::move(map)};
  } catch (const FormatError& e) {
    if (e.code() != FormatErrc::kDisconnected) throw;
    throw FormatError(FormatErrc::kDisconnected, 0,
                      "reduced graph is disconnected; every variable must occur in a clause and the "
                      "clauses must share variables transitively");
  }
}

VertexSet assignment_to_subset(const MonotoneCnf& cnf, const Assignment& assignment, const VertexMap& map) {
  if (map.variables.size() != cnf.num_vars || map.clauses.size() != cnf.clauses.size()) {
    throw PreconditionError(PreconditionErrc::kMapMismatch,
                            "map covers " + std::to_string(map.variables.size()) + " variables and " +
                                std::to_string(map.clauses.size()) + " clauses, formula has " +
                                std::to_string(cnf.num_vars) + " and " + std::to_string(cnf.clauses.size()));
  }
  if (!satisfies(cnf, assignment)) throw PreconditionError(PreconditionErrc::kUnsatisfied, "");
  VertexSet out;
  for (std::size_t i = 0; i < cnf.num_vars; ++i) {
    const auto& side = assignment[i] ? map.variables[i].positive : map.variables[i].negative;
    out.push_back(side[0]);
    out.push_back(side[2]);
  }
  for (const auto& c : map.clauses) out.push_back(c[0]);
  std::sort(out.begin(), out.end());
  return out;
}

Assignment subset_to_assignment(const ColoredGraph& graph, const MonotoneCnf& cnf, std::span<const Vertex> subset,
                                const VertexMap& map) {
  if (map.variables.size() != cnf.num_vars || map.clauses.size() != cnf.clauses.size()) {
    throw PreconditionError(PreconditionErrc::kMapMismatch,
                            "map covers " + std::to_string(map.variables.size()) + " variables and " +
                                std::to_string(map.clauses.size()) + " clauses, formula has " +
                                std::to_string(cnf.num_vars) + " and " + std::to_string(cnf.clauses.size()));
  }
  const VertexSet members = make_vertex_set(graph, subset);
  if (const Selectivity check = is_selective(graph, members); !check) {
    throw PreconditionError(PreconditionErrc::kNotSelective,
                            "vertex " + std::to_string(*check.witness + 1) + " has no same-colored nearest neighbour");
  }
  const std::size_t expected = 2 * cnf.num_vars + cnf.clauses.size();
  if (members.size() != expected) {
    throw PreconditionError(PreconditionErrc::kWrongSize,
                            std::to_string(members.size()) + " vertices, expected " + std::to_string(expected));
  }

  auto has = [&](Vertex v) { return std::binary_search(members.begin(), members.end(), v); };
  auto fail = [](const std::string& where) { throw PreconditionError(PreconditionErrc::kNotDecomposable, where); };
  Assignment assignment(cnf.num_vars, false);
  for (std::size_t i = 0; i < cnf.num_vars; ++i) {
    const auto& g = map.variables[i];
    if (has(g.positive[0]) == has(g.negative[0]) || has(g.positive[2]) == has(g.negative[2]) || has(g.positive[1]) ||
        has(g.negative[1])) {
      fail("variable " + std::to_string(i + 1));
    }
    assignment[i] = has(g.positive[2]);
  }
  for (std::size_t j = 0; j < map.clauses.size(); ++j) {
    const auto& c = map.clauses[j];
    if (has(c[0]) == has(c[1]) || has(c[2])) fail("clause " + std::to_string(j + 1));
  }
  if (!satisfies(cnf, assignment)) throw PreconditionError(PreconditionErrc::kUnsatisfied, "recovered assignment");
  return assignment;
}

void write_vertex_map(std::ostream& out, const VertexMap& map) {
  auto ids = [&](const std::array<Vertex, 3>& a) {
    out << ' ' << a[0] + 1 << ' ' << a[1] + 1 << ' ' << a[2] + 1 << '\n';
  };
  for (std::size_t i = 0; i < map.variables.size(); ++i) {
    out << "x " << i + 1;
    ids(map.variables[i].positive);
    out << "nx " << i + 1;
    ids(map.variables[i].negative);
  }
  for (std::size_t j = 0; j < map.clauses.size(); ++j) {
    out << "c " << j + 1;
    ids(map.clauses[j]);
  }
}

VertexMap parse_vertex_map(std::istream& in) {
  detail::LineReader reader(in);
  detail::Line line;
  struct Row {
    std::string kind;
    std::size_t index;
    std::array<Vertex, 3> ids;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  while (reader.next(line)) {
    detail::expect_tokens(line, 5, "'<x|nx|c> <index> <id1> <id2> <id3>'");
    Row row{line.tokens[0], detail::parse_number<std::size_t>(line.tokens[1], line.number), {}, line.number};
    if (row.kind != "x" && row.kind != "nx" && row.kind != "c") {
      throw FormatError(FormatErrc::kMalformedLine, line.number, "unknown record '" + row.kind + "'");
    }
    if (row.index == 0) throw FormatError(FormatErrc::kMalformedLine, line.number, "indices are 1-based");
    for (std::size_t k = 0; k < 3; ++k) {
      const auto id = detail::parse_number<std::size_t>(line.tokens[2 + k], line.number);
      if (id == 0) throw FormatError(FormatErrc::kVertexOutOfRange, line.number, "vertex ids are 1-based");
      row.ids[k] = static_cast<Vertex>(id - 1);
    }
    std::size_t& count = row.kind == "c" ? num_clauses : num_vars;
    count = std::max(count, row.index);
    rows.push_back(row);
  }
  VertexMap map;
  map.variables.resize(num_vars);
  map.clauses.resize(num_clauses);
  std::vector<int> seen(2 * num_vars + num_clauses, 0);
  for (const Row& row : rows) {
    const std::size_t i = row.index - 1;
    std::size_t slot = 0;
    if (row.kind == "x") {
      map.variables[i].positive = row.ids;
      slot = 2 * i;
    } else if (row.kind == "nx") {
      map.variables[i].negative = row.ids;
      slot = 2 * i + 1;
    } else {
      map.clauses[i] = row.ids;
      slot = 2 * num_vars + i;
    }
    if (seen[slot]++) throw FormatError(FormatErrc::kDuplicateVertex, row.line, "repeated map record");
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw FormatError(FormatErrc::kCountMismatch, 0, "vertex map is missing records");
  }
  return map;
}

void write_assignment(std::ostream& out, const Assignment& assignment) {
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i != 0) out << ' ';
    out << (assignment[i] ? "" : "-") << i + 1;
  }
  out << '\n';
}

Assignment parse_assignment(std::istream& in, std::size_t num_vars) {
  detail::LineReader reader(in);
  detail::Line line;
  Assignment out(num_vars, false);
  std::vector<bool> seen(num_vars, false);
  std::size_t count = 0;
  while (reader.next(line)) {
    for (const std::string& token : line.tokens) {
      const auto lit = detail::parse_number<long long>(token, line.number);
      if (lit == 0) continue;
      const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
      if (var > num_vars) {
        throw FormatError(FormatErrc::kVariableOutOfRange, line.number,
                          "variable " + std::to_string(var) + " outside 1.." + std::to_string(num_vars));
      }
      if (seen[var - 1]) throw FormatError(FormatErrc::kRepeatedVariable, line.number, "variable " + token);
      seen[var - 1] = true;
      out[var - 1] = lit > 0;
      ++count;
    }
  }
  if (count != num_vars) {
    throw FormatError(FormatErrc::kCountMismatch, 0,
                      "assignment sets " + std::to_string(count) + " of " + std::to_string(num_vars) + " variables");
  }
  return out;
}

}  // namespace selset
