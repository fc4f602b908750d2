#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "selset/graph.hpp"

namespace selset {

struct CoverSet {
  Vertex source = kNoVertex;
  std::vector<std::uint32_t> elements;  // sorted element indices
};

// Universe element j stands for the b1 vertex element_source[j]; one set
// per ball vertex b, holding the elements whose vertex is b itself or a
// neighbour of b in the same block. Built block by block, in block order,
// vertices ascending within a block.
struct SetCoverInstance {
  std::vector<Vertex> element_source;
  std::vector<CoverSet> sets;

  std::size_t universe_size() const noexcept { return element_source.size(); }
};

// Throws PreconditionError(kMonochromatic) for a one-color graph, where the
// universe would be empty.
SetCoverInstance to_set_cover(const ColoredGraph& graph);

// Greedy cover: repeatedly takes the set covering the most uncovered
// elements, ties by smallest source. Returns set indices in pick order.
// With k = max set size the result is at most H(k) times optimal.
std::vector<std::size_t> greedy_set_cover(const SetCoverInstance& instance);

bool is_cover(const SetCoverInstance& instance, std::span<const std::size_t> chosen);

// Greedy cover mapped back to vertices; an O(log n)-approximation of the
// minimum selective subset. A monochromatic graph yields {vertex 0}.
SelectiveSubset approx_mss(const ColoredGraph& graph);

//   u <n1>
//   s <source-vertex> <elem> <elem> ...
// Vertices and elements are written 1-based.
void write_set_cover(std::ostream& out, const SetCoverInstance& instance);

}  // namespace selset
