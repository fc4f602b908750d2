#pragma once

#include <cstddef>

#include "selset/graph.hpp"

namespace selset {

enum class SearchSpace {
  kFullBlock,     // candidates are all block members
  kBoundaryOnly,  // candidates restricted to the block's ball
};

struct OracleConfig {
  std::size_t max_block = 20;  // largest candidate set enumerated; at most 64
  SearchSpace search = SearchSpace::kFullBlock;
};

// Minimum subset M of the block's candidates such that every member v of
// color l has a vertex of M among its nearest neighbours in M + (V \ V_l).
// Subsets are tried by increasing size, then lexicographically, so the
// answer is deterministic. Distances are taken in the whole graph.
// Throws PreconditionError(kBudgetExceeded) when the candidate set is
// larger than cfg.max_block.
VertexSet exact_block(const ColoredGraph& graph, const Block& block, const OracleConfig& cfg = {});

// Union of exact_block over all blocks; blocks are independent, so the
// union is a minimum selective subset.
SelectiveSubset exact_mss(const ColoredGraph& graph, const OracleConfig& cfg = {});

}  // namespace selset
