#include "selset/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "bfs.hpp"
#include "selset/error.hpp"
#include "text.hpp"

namespace selset {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kTree: return "tree";
    case Method::kInterval: return "interval";
    case Method::kGreedy: return "greedy";
    case Method::kBrute: return "brute";
    case Method::kManual: return "manual";
  }
  return "unknown";
}

ColoredGraph::ColoredGraph(std::vector<Color> colors, std::span<const Edge> edges)
    : colors_(std::move(colors)) {
  const std::size_t n = colors_.size();
  if (n == 0) throw FormatError(FormatErrc::kEmptyGraph, 0, "graph has no vertices");

  num_colors_ = *std::max_element(colors_.begin(), colors_.end()) + std::size_t{1};
  std::vector<bool> used(num_colors_, false);
  for (Color c : colors_) used[c] = true;
  for (std::size_t c = 0; c < num_colors_; ++c) {
    if (!used[c]) {
      throw FormatError(FormatErrc::kUnusedColor, 0,
                        "color " + std::to_string(c + 1) + " is not used by any vertex");
    }
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw FormatError(FormatErrc::kVertexOutOfRange, 0,
                        "edge endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw FormatError(FormatErrc::kSelfLoop, 0, "vertex " + std::to_string(e.u + 1));
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw FormatError(FormatErrc::kDuplicateEdge, 0,
                        std::to_string(v + 1) + " " + std::to_string(*dup + 1));
    }
  }

  detail::Bfs bfs(n);
  std::size_t reached = 0;
  bfs.run(*this, 0, [&](std::span<const Vertex> level, std::size_t) {
    reached += level.size();
    return false;
  });
  if (reached != n) {
    throw FormatError(FormatErrc::kDisconnected, 0,
                      std::to_string(n - reached) + " of " + std::to_string(n) +
                          " vertices unreachable from vertex 1");
  }
}

bool ColoredGraph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

void require_vertex(const ColoredGraph& graph, Vertex v) {
  if (!graph.contains(v)) {
    throw PreconditionError(PreconditionErrc::kInvalidVertex,
                            "vertex index " + std::to_string(v) + " outside graph of " +
                                std::to_string(graph.num_vertices()) + " vertices");
  }
}

}  // namespace

std::size_t hop_distance(const ColoredGraph& graph, Vertex u, Vertex v) {
  require_vertex(graph, u);
  require_vertex(graph, v);
  std::size_t result = kUnreachable;
  detail::Bfs bfs(graph.num_vertices());
  bfs.run(graph, u, [&](std::span<const Vertex> level, std::size_t depth) {
    if (std::find(level.begin(), level.end(), v) != level.end()) {
      result = depth;
      return true;
    }
    return false;
  });
  return result;
}

VertexSet nearest_set(const ColoredGraph& graph, Vertex v, std::span<const Vertex> candidates) {
  require_vertex(graph, v);
  if (candidates.empty()) {
    throw PreconditionError(PreconditionErrc::kEmptySet, "nearest_set needs a nonempty candidate set");
  }
  std::vector<bool> is_candidate(graph.num_vertices(), false);
  for (Vertex u : candidates) {
    require_vertex(graph, u);
    is_candidate[u] = true;
  }
  VertexSet result;
  detail::Bfs bfs(graph.num_vertices());
  bfs.run(graph, v, [&](std::span<const Vertex> level, std::size_t) {
    for (Vertex u : level) {
      if (is_candidate[u]) result.push_back(u);
    }
    return !result.empty();
  });
  std::sort(result.begin(), result.end());
  return result;
}

BlockDecomposition decompose_blocks(const ColoredGraph& graph) {
  const std::size_t n = graph.num_vertices();
  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  BlockDecomposition out;
  out.block_of.assign(n, kUnassigned);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (out.block_of[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.blocks.size());
    Block block{id, graph.color(start), {}};
    out.block_of[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      block.members.push_back(u);
      for (Vertex w : graph.neighbors(u)) {
        if (out.block_of[w] == kUnassigned && graph.color(w) == block.color) {
          out.block_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.members.begin(), block.members.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<Block> blocks(const ColoredGraph& graph) { return decompose_blocks(graph).blocks; }

std::size_t block_lower_bound(const ColoredGraph& graph) { return decompose_blocks(graph).blocks.size(); }

VertexSet make_vertex_set(const ColoredGraph& graph, std::span<const Vertex> vertices) {
  VertexSet out(vertices.begin(), vertices.end());
  for (Vertex v : out) require_vertex(graph, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Selectivity is_selective(const ColoredGraph& graph, std::span<const Vertex> subset) {
  const std::size_t n = graph.num_vertices();
  std::vector<bool> in_subset(n, false);
  for (Vertex v : subset) {
    require_vertex(graph, v);
    in_subset[v] = true;
  }

  detail::Bfs bfs(n);
  for (Vertex v = 0; v < n; ++v) {
    if (in_subset[v]) continue;  // v is its own nearest neighbour
    const Color own = graph.color(v);
    bool satisfied = false;
    bfs.run(graph, v, [&](std::span<const Vertex> level, std::size_t depth) {
      if (depth == 0) return false;
      bool reached_target = false;
      for (Vertex u : level) {
        const bool same = graph.color(u) == own;
        if (!same || in_subset[u]) reached_target = true;
        if (same && in_subset[u]) satisfied = true;
      }
      return reached_target;
    });
    if (!satisfied) return {false, v};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Text formats

ColoredGraph parse_graph(std::istream& in) {
  detail::LineReader reader(in);
  detail::Line line;
  if (!reader.next(line)) {
    throw FormatError(FormatErrc::kMalformedLine, reader.line_number(), "missing 'p mss' header");
  }
  if (line.tokens.size() != 5 || line.tokens[0] != "p" || line.tokens[1] != "mss") {
    throw FormatError(FormatErrc::kMalformedLine, line.number, "expected 'p mss <n> <m> <c>'");
  }
  const auto n = detail::parse_number<std::size_t>(line.tokens[2], line.number);
  const auto m = detail::parse_number<std::size_t>(line.tokens[3], line.number);
  const auto c = detail::parse_number<std::size_t>(line.tokens[4], line.number);
  if (n == 0) throw FormatError(FormatErrc::kEmptyGraph, line.number, "n must be positive");
  if (c == 0 || c > n) {
    throw FormatError(FormatErrc::kCountMismatch, line.number, "c must be in 1..n");
  }

  constexpr Color kUnset = std::numeric_limits<Color>::max();
  std::vector<Color> colors(n, kUnset);
  std::size_t vertex_lines = 0;
  struct EdgeLine {
    Edge edge;
    std::size_t line;
  };
  std::vector<EdgeLine> edges;

  auto parse_vertex = [&](const std::string& token, std::size_t at) -> Vertex {
    const auto id = detail::parse_number<std::size_t>(token, at);
    if (id < 1 || id > n) {
      throw FormatError(FormatErrc::kVertexOutOfRange, at,
                        "vertex " + token + " outside 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(id - 1);
  };

  while (reader.next(line)) {
    const std::string& kind = line.tokens[0];
    if (kind == "v") {
      detail::expect_tokens(line, 3, "'v <id> <color>'");
      const Vertex v = parse_vertex(line.tokens[1], line.number);
      const auto color = detail::parse_number<std::size_t>(line.tokens[2], line.number);
      if (color < 1 || color > c) {
        throw FormatError(FormatErrc::kColorOutOfRange, line.number,
                          "color " + line.tokens[2] + " outside 1.." + std::to_string(c));
      }
      if (colors[v] != kUnset) {
        throw FormatError(FormatErrc::kDuplicateVertex, line.number, "vertex " + line.tokens[1]);
      }
      colors[v] = static_cast<Color>(color - 1);
      ++vertex_lines;
    } else if (kind == "e") {
      detail::expect_tokens(line, 3, "'e <u> <v>'");
      const Vertex u = parse_vertex(line.tokens[1], line.number);
      const Vertex v = parse_vertex(line.tokens[2], line.number);
      if (u == v) throw FormatError(FormatErrc::kSelfLoop, line.number, "vertex " + line.tokens[1]);
      edges.push_back({{std::min(u, v), std::max(u, v)}, line.number});
    } else {
      throw FormatError(FormatErrc::kMalformedLine, line.number, "unknown record '" + kind + "'");
    }
  }

  if (vertex_lines != n) {
    auto missing = std::find(colors.begin(), colors.end(), kUnset) - colors.begin();
    throw FormatError(FormatErrc::kCountMismatch, 0,
                      "declared " + std::to_string(n) + " vertices, found " + std::to_string(vertex_lines) +
                          " (vertex " + std::to_string(missing + 1) + " missing)");
  }
  if (edges.size() != m) {
    throw FormatError(FormatErrc::kCountMismatch, 0,
                      "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(edges[a].edge.u, edges[a].edge.v, edges[a].line) <
           std::tie(edges[b].edge.u, edges[b].edge.v, edges[b].line);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& prev = edges[order[i - 1]];
    const auto& cur = edges[order[i]];
    if (prev.edge.u == cur.edge.u && prev.edge.v == cur.edge.v) {
      throw FormatError(FormatErrc::kDuplicateEdge, cur.line,
                        std::to_string(cur.edge.u + 1) + " " + std::to_string(cur.edge.v + 1) +
                            " (first on line " + std::to_string(prev.line) + ")");
    }
  }

  std::vector<bool> used(c, false);
  for (Color col : colors) used[col] = true;
  for (std::size_t col = 0; col < c; ++col) {
    if (!used[col]) {
      throw FormatError(FormatErrc::kUnusedColor, 0,
                        "declared " + std::to_string(c) + " colors but color " + std::to_string(col + 1) +
                            " is not used");
    }
  }

  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.push_back(e.edge);
  return ColoredGraph(std::move(colors), plain);
}

ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const ColoredGraph& graph) {
  out << "p mss " << graph.num_vertices() << ' ' << graph.num_edges() << ' ' << graph.num_colors() << '\n';
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    out << "v " << v + 1 << ' ' << graph.color(v) + 1 << '\n';
  }
  for (const Edge& e : graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

VertexSet parse_subset(std::istream& in, std::size_t num_vertices) {
  detail::LineReader reader(in);
  detail::Line line;
  VertexSet out;
  std::vector<bool> seen(num_vertices, false);
  while (reader.next(line)) {
    for (const std::string& token : line.tokens) {
      const auto id = detail::parse_number<std::size_t>(token, line.number);
      if (id < 1 || id > num_vertices) {
        throw FormatError(FormatErrc::kVertexOutOfRange, line.number,
                          "vertex " + token + " outside 1.." + std::to_string(num_vertices));
      }
      if (seen[id - 1]) throw FormatError(FormatErrc::kDuplicateVertex, line.number, "vertex " + token);
      seen[id - 1] = true;
      out.push_back(static_cast<Vertex>(id - 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet parse_subset(std::string_view text, std::size_t num_vertices) {
  std::istringstream in{std::string(text)};
  return parse_subset(in, num_vertices);
}

void write_subset(std::ostream& out, std::span<const Vertex> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i != 0) out << ' ';
    out << subset[i] + 1;
  }
  out << '\n';
}

}  // namespace selset
