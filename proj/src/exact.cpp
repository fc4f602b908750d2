#include "selset/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bfs.hpp"
#include "selset/boundary.hpp"
#include "selset/error.hpp"

namespace selset {

namespace {

constexpr std::size_t kMaxCandidates = 64;

// Visits k-element index combinations of [0, n) in lexicographic order as
// bitmasks; stops early when visit returns true.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
    if (visit(mask)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexSet exact_block(const ColoredGraph& graph, const Block& block, const OracleConfig& cfg) {
  const BoundaryPartition part = boundary_partition(graph, block);
  const VertexSet& candidates =
      (cfg.search == SearchSpace::kBoundaryOnly && !part.ball.empty()) ? part.ball : block.members;
  const std::size_t limit = std::min(cfg.max_block, kMaxCandidates);
  if (candidates.size() > limit) {
    throw PreconditionError(PreconditionErrc::kBudgetExceeded,
                            "block " + std::to_string(block.id + 1) + " has " + std::to_string(candidates.size()) +
                                " candidates, budget is " + std::to_string(limit));
  }

  // For each member v: the candidates no farther from v than v's nearest
  // vertex of another color. M works for v iff it meets that mask.
  const std::size_t n = graph.num_vertices();
  std::vector<std::size_t> dist(n, kUnreachable);
  detail::Bfs bfs(n);
  std::vector<std::uint64_t> masks;
  masks.reserve(block.members.size());
  for (Vertex v : block.members) {
    std::size_t foreign = kUnreachable;
    bfs.run(graph, v, [&](std::span<const Vertex> level, std::size_t depth) {
      for (Vertex u : level) {
        dist[u] = depth;
        if (graph.color(u) != block.color && foreign == kUnreachable) foreign = depth;
      }
      return false;
    });
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (dist[candidates[i]] <= foreign) mask |= std::uint64_t{1} << i;
    }
    masks.push_back(mask);
  }

  std::uint64_t best = 0;
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    const bool found = for_each_combination(candidates.size(), k, [&](std::uint64_t chosen) {
      for (std::uint64_t m : masks) {
        if ((m & chosen) == 0) return false;
      }
      best = chosen;
      return true;
    });
    if (found) break;
  }
  if (best == 0) {
    throw VerificationError("no selective subset found for block " + std::to_string(block.id + 1));
  }

  VertexSet out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (best & (std::uint64_t{1} << i)) out.push_back(candidates[i]);
  }
  return out;
}

SelectiveSubset exact_mss(const ColoredGraph& graph, const OracleConfig& cfg) {
  SelectiveSubset result{{}, Method::kBrute};
  for (const Block& block : blocks(graph)) {
    const VertexSet part = exact_block(graph, block, cfg);
    result.members.insert(result.members.end(), part.begin(), part.end());
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

}  // namespace selset
