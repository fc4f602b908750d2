#pragma once

#include <cstdint>
#include <vector>

#include "selset/boundary.hpp"
#include "selset/graph.hpp"

namespace selset {

// A connected piece of one block's ball, rooted at its member closest to
// the global root. `parent` and `depth` run parallel to `members`; depth is
// measured from the global root, and the subtree root has parent kNoVertex.
struct RootedSubtree {
  Vertex root = kNoVertex;
  VertexSet members;
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
};

// Connected components of the tree induced on part.ball, ordered by root.
// Throws PreconditionError(kNotATree) unless m = n - 1.
std::vector<RootedSubtree> subtrees(const ColoredGraph& tree, const BoundaryPartition& part, Vertex root);

// Exact minimum selective subset of a tree in O(n).
//
// Within every ball subtree the deepest remaining vertex u is taken first;
// the order among equally deep vertices does not change the result. A b2
// vertex is dropped. A b1 vertex with a parent v in its subtree puts v into
// the solution, removes v and v's children, and demotes v's parent from b1
// to b2; without a parent, u itself is taken.
// A monochromatic tree yields {root}.
SelectiveSubset solve_tree(const ColoredGraph& tree, Vertex root = 0);

}  // namespace selset
