#include "selset/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "selset/error.hpp"

namespace selset {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling: draws at or above the largest multiple of bound are
  // retried so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomTree: return "random-tree";
    case GeneratorKind::kRandomUnitInterval: return "random-unit-interval";
    case GeneratorKind::kRandomConnectedGraph: return "random-connected-graph";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::kRandomTree, GeneratorKind::kRandomUnitInterval,
                    GeneratorKind::kRandomConnectedGraph}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

void check_sizes(std::size_t n, std::size_t c) {
  if (n == 0 || c == 0 || c > n) {
    throw PreconditionError(PreconditionErrc::kInvalidSpec,
                            "need 1 <= c <= n, got n=" + std::to_string(n) + " c=" + std::to_string(c));
  }
}

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

// Uniform colors with every color forced onto one random vertex.
std::vector<Color> random_colors(std::size_t n, std::size_t c, Rng& rng) {
  std::vector<Color> colors(n);
  for (auto& col : colors) col = static_cast<Color>(rng.below(c));
  std::vector<Vertex> slots(n);
  std::iota(slots.begin(), slots.end(), Vertex{0});
  for (std::size_t i = 0; i < c; ++i) {
    std::swap(slots[i], slots[i + rng.below(n - i)]);
    colors[slots[i]] = static_cast<Color>(i);
  }
  return colors;
}

std::vector<Edge> random_tree_edges(std::size_t n, Rng& rng) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  shuffle(label, rng);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) edges.push_back({label[rng.below(i)], label[i]});
  return edges;
}

}  // namespace

ColoredGraph random_tree(std::size_t n, std::size_t c, std::uint64_t seed) {
  check_sizes(n, c);
  Rng rng(seed);
  auto edges = random_tree_edges(n, rng);
  return ColoredGraph(random_colors(n, c, rng), edges);
}

ColoredGraph random_connected_graph(std::size_t n, std::size_t c, double edge_probability, std::uint64_t seed) {
  check_sizes(n, c);
  Rng rng(seed);
  auto edges = random_tree_edges(n, rng);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (const Edge& e : edges) present[e.u][e.v] = present[e.v][e.u] = true;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present[u][v] && rng.chance(edge_probability)) edges.push_back({u, v});
    }
  }
  return ColoredGraph(random_colors(n, c, rng), edges);
}

UnitIntervalInstance random_unit_interval(std::size_t n, std::size_t c, std::int64_t unit_length,
                                          std::uint64_t seed) {
  check_sizes(n, c);
  if (unit_length <= 0) throw PreconditionError(PreconditionErrc::kInvalidSpec, "unit length must be positive");
  Rng rng(seed);
  std::vector<std::int64_t> lefts(n, 0);
  for (std::size_t i = 1; i < n; ++i) lefts[i] = lefts[i - 1] + rng.between(0, unit_length);
  shuffle(lefts, rng);
  const auto colors = random_colors(n, c, rng);
  UnitIntervalInstance out;
  out.unit_length = unit_length;
  out.intervals.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.intervals[i] = {lefts[i], colors[i]};
  return out;
}

std::string generate(const GeneratorSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case GeneratorKind::kRandomTree:
      write_graph(out, random_tree(spec.n, spec.c, spec.seed));
      break;
    case GeneratorKind::kRandomConnectedGraph:
      write_graph(out, random_connected_graph(spec.n, spec.c, spec.edge_probability, spec.seed));
      break;
    case GeneratorKind::kRandomUnitInterval:
      write_unit_intervals(out, random_unit_interval(spec.n, spec.c, spec.unit_length, spec.seed));
      break;
  }
  return out.str();
}

}  // namespace selset
