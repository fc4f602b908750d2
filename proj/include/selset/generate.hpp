#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "selset/graph.hpp"
#include "selset/interval_solver.hpp"

namespace selset {

// Deterministic across platforms: mt19937_64 is fully specified and the
// draws below avoid the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind { kRandomTree, kRandomUnitInterval, kRandomConnectedGraph };

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandomTree;
  std::size_t n = 1;
  std::size_t c = 1;
  std::uint64_t seed = 0;
  double edge_probability = 0.2;  // random-connected-graph: extra edges
  std::int64_t unit_length = 4;   // random-unit-interval: L, also the largest gap
};

// Random parent attachment, then a random relabelling of the vertices.
ColoredGraph random_tree(std::size_t n, std::size_t c, std::uint64_t seed);

// Random spanning tree plus every other pair with the given probability.
ColoredGraph random_connected_graph(std::size_t n, std::size_t c, double edge_probability, std::uint64_t seed);

// Sorted lefts with consecutive gaps in [0, unit_length], ids shuffled.
UnitIntervalInstance random_unit_interval(std::size_t n, std::size_t c, std::int64_t unit_length,
                                          std::uint64_t seed);

// Instance file text (graph or interval format). Throws
// PreconditionError(kInvalidSpec) unless 1 <= c <= n.
std::string generate(const GeneratorSpec& spec);

}  // namespace selset
