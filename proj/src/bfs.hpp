#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "selset/graph.hpp"

namespace selset::detail {

// Level-synchronous BFS with generation stamps, so one instance can be
// reused for many sources without an O(n) reset each time.
class Bfs {
 public:
  explicit Bfs(std::size_t num_vertices) : stamp_(num_vertices, 0) {}

  // Calls on_level(level, depth) for depth = 0, 1, ... until it returns true
  // or the component is exhausted.
  template <class OnLevel>
  void run(const ColoredGraph& graph, Vertex source, OnLevel&& on_level) {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    current_.assign(1, source);
    stamp_[source] = generation_;
    for (std::size_t depth = 0; !current_.empty(); ++depth) {
      if (on_level(std::span<const Vertex>(current_), depth)) return;
      next_.clear();
      for (Vertex u : current_) {
        for (Vertex w : graph.neighbors(u)) {
          if (stamp_[w] != generation_) {
            stamp_[w] = generation_;
            next_.push_back(w);
          }
        }
      }
      current_.swap(next_);
    }
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<Vertex> current_;
  std::vector<Vertex> next_;
};

}  // namespace selset::detail
