#include "selset/set_cover.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <queue>
#include <string>
#include <tuple>

#include "selset/boundary.hpp"
#include "selset/error.hpp"

namespace selset {

SetCoverInstance to_set_cover(const ColoredGraph& graph) {
  if (graph.num_colors() < 2) {
    throw PreconditionError(PreconditionErrc::kMonochromatic, "set cover reduction needs at least two colors");
  }
  const BlockDecomposition decomposition = decompose_blocks(graph);
  const auto parts = boundary_partitions(graph, decomposition);

  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> element_of(graph.num_vertices(), kNone);
  SetCoverInstance out;
  for (const BoundaryPartition& part : parts) {
    for (Vertex a : part.b1) {
      element_of[a] = static_cast<std::uint32_t>(out.element_source.size());
      out.element_source.push_back(a);
    }
  }
  for (const BoundaryPartition& part : parts) {
    for (Vertex b : part.ball) {
      CoverSet set{b, {}};
      if (element_of[b] != kNone) set.elements.push_back(element_of[b]);
      for (Vertex w : graph.neighbors(b)) {
        if (element_of[w] != kNone && decomposition.block_of[w] == decomposition.block_of[b]) {
          set.elements.push_back(element_of[w]);
        }
      }
      std::sort(set.elements.begin(), set.elements.end());
      out.sets.push_back(std::move(set));
    }
  }
  return out;
}

std::vector<std::size_t> greedy_set_cover(const SetCoverInstance& instance) {
  const std::size_t universe = instance.universe_size();
  std::vector<bool> covered(universe, false);
  std::size_t remaining = universe;

  auto gain_of = [&](std::size_t s) {
    std::size_t gain = 0;
    for (std::uint32_t e : instance.sets[s].elements) gain += covered[e] ? 0 : 1;
    return gain;
  };

  // Max-heap on gain, then smallest source, then smallest index. Gains only
  // shrink, so a popped entry whose gain is still current is the true best.
  using Entry = std::tuple<std::size_t, Vertex, std::size_t>;
  auto worse = [](const Entry& a, const Entry& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
    return std::get<2>(a) > std::get<2>(b);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (std::size_t s = 0; s < instance.sets.size(); ++s) {
    for (std::uint32_t e : instance.sets[s].elements) {
      if (e >= universe) {
        throw PreconditionError(PreconditionErrc::kUncoverable,
                                "set " + std::to_string(s + 1) + " names element " + std::to_string(e + 1) +
                                    " outside the universe");
      }
    }
    if (!instance.sets[s].elements.empty()) heap.emplace(instance.sets[s].elements.size(), instance.sets[s].source, s);
  }

  std::vector<std::size_t> chosen;
  while (remaining > 0 && !heap.empty()) {
    auto [stored, source, s] = heap.top();
    heap.pop();
    const std::size_t gain = gain_of(s);
    if (gain == 0) continue;
    if (gain < stored) {
      heap.emplace(gain, source, s);
      continue;
    }
    chosen.push_back(s);
    for (std::uint32_t e : instance.sets[s].elements) {
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    const auto missing = std::find(covered.begin(), covered.end(), false) - covered.begin();
    throw PreconditionError(PreconditionErrc::kUncoverable, "element " + std::to_string(missing + 1));
  }
  return chosen;
}

bool is_cover(const SetCoverInstance& instance, std::span<const std::size_t> chosen) {
  std::vector<bool> covered(instance.universe_size(), false);
  for (std::size_t s : chosen) {
    if (s >= instance.sets.size()) return false;
    for (std::uint32_t e : instance.sets[s].elements) {
      if (e < covered.size()) covered[e] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

SelectiveSubset approx_mss(const ColoredGraph& graph) {
  SelectiveSubset result{{}, Method::kGreedy};
  if (graph.num_colors() < 2) {
    result.members = {0};
    return result;
  }
  const SetCoverInstance instance = to_set_cover(graph);
  for (std::size_t s : greedy_set_cover(instance)) result.members.push_back(instance.sets[s].source);
  std::sort(result.members.begin(), result.members.end());
  return result;
}

void write_set_cover(std::ostream& out, const SetCoverInstance& instance) {
  out << "u " << instance.universe_size() << '\n';
  for (const CoverSet& set : instance.sets) {
    out << "s " << set.source + 1;
    for (std::uint32_t e : set.elements) out << ' ' << e + 1;
    out << '\n';
  }
}

}  // namespace selset
