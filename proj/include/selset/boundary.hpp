#pragma once

#include <cstdint>
#include <vector>

#include "selset/graph.hpp"

namespace selset {

// Per-block boundary sets. b1 holds the block's vertices with a neighbour
// of another color, b2 the remaining vertices adjacent to b1, and
// ball = b1 + b2. All three are sorted.
struct BoundaryPartition {
  std::uint32_t block_id = 0;
  VertexSet b1;
  VertexSet b2;
  VertexSet ball;
};

enum class BoundaryRole : std::uint8_t { kInterior, kB1, kB2 };

// Role of every vertex, O(n + m).
std::vector<BoundaryRole> boundary_roles(const ColoredGraph& graph);

// Checks that `block` really is a block of `graph` (connected,
// monochromatic, maximal) and throws PreconditionError otherwise.
BoundaryPartition boundary_partition(const ColoredGraph& graph, const Block& block);

// One partition per block of the decomposition, in block order.
std::vector<BoundaryPartition> boundary_partitions(const ColoredGraph& graph,
                                                   const BlockDecomposition& decomposition);

}  // namespace selset
