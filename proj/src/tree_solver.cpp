#include "selset/tree_solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "selset/error.hpp"

namespace selset {

namespace {

struct RootedTree {
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
  std::uint32_t max_depth = 0;
};

void require_tree(const ColoredGraph& tree, Vertex root) {
  if (!tree.is_tree()) {
    throw PreconditionError(PreconditionErrc::kNotATree,
                            std::to_string(tree.num_vertices()) + " vertices but " +
                                std::to_string(tree.num_edges()) + " edges");
  }
  if (!tree.contains(root)) {
    throw PreconditionError(PreconditionErrc::kInvalidVertex, "root " + std::to_string(root + 1));
  }
}

RootedTree root_tree(const ColoredGraph& tree, Vertex root) {
  const std::size_t n = tree.num_vertices();
  RootedTree out;
  out.parent.assign(n, kNoVertex);
  out.depth.assign(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : tree.neighbors(u)) {
      if (w == out.parent[u]) continue;
      out.parent[w] = u;
      out.depth[w] = out.depth[u] + 1;
      out.max_depth = std::max(out.max_depth, out.depth[w]);
      queue.push_back(w);
    }
  }
  return out;
}

}  // namespace

std::vector<RootedSubtree> subtrees(const ColoredGraph& tree, const BoundaryPartition& part, Vertex root) {
  require_tree(tree, root);
  const RootedTree layout = root_tree(tree, root);

  std::vector<bool> in_ball(tree.num_vertices(), false);
  for (Vertex v : part.ball) in_ball[v] = true;

  VertexSet by_depth = part.ball;
  std::sort(by_depth.begin(), by_depth.end(), [&](Vertex a, Vertex b) {
    return layout.depth[a] != layout.depth[b] ? layout.depth[a] < layout.depth[b] : a < b;
  });

  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> component(tree.num_vertices(), kNone);
  std::vector<RootedSubtree> out;
  for (Vertex v : by_depth) {
    const Vertex p = layout.parent[v];
    if (p != kNoVertex && in_ball[p]) {
      component[v] = component[p];
    } else {
      component[v] = static_cast<std::uint32_t>(out.size());
      out.push_back(RootedSubtree{v, {}, {}, {}});
    }
  }
  for (Vertex v : part.ball) {
    RootedSubtree& sub = out[component[v]];
    sub.members.push_back(v);
    sub.parent.push_back(v == sub.root ? kNoVertex : layout.parent[v]);
    sub.depth.push_back(layout.depth[v]);
  }
  std::sort(out.begin(), out.end(), [](const RootedSubtree& a, const RootedSubtree& b) { return a.root < b.root; });
  return out;
}

SelectiveSubset solve_tree(const ColoredGraph& tree, Vertex root) {
  require_tree(tree, root);
  const std::size_t n = tree.num_vertices();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();

  // Relabel by BFS position so every pass after the BFS is a linear scan.
  // Children of position p occupy [first_child[p], first_child[p + 1]).
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::uint32_t> parent(n, kNone);
  std::vector<std::uint32_t> first_child(n + 1);
  std::vector<Color> color(n);
  {
    std::vector<Vertex> parent_id(n, kNoVertex);
    order.push_back(root);
    for (std::uint32_t p = 0; p < order.size(); ++p) {
      const Vertex u = order[p];
      color[p] = tree.color(u);
      first_child[p] = static_cast<std::uint32_t>(order.size());
      for (Vertex w : tree.neighbors(u)) {
        if (w == parent_id[u]) continue;
        parent_id[w] = u;
        parent[order.size()] = p;
        order.push_back(w);
      }
    }
    first_child[n] = static_cast<std::uint32_t>(n);
  }

  std::vector<BoundaryRole> state(n, BoundaryRole::kInterior);
  for (std::uint32_t p = 0; p < n; ++p) {
    bool b1 = parent[p] != kNone && color[parent[p]] != color[p];
    for (std::uint32_t c = first_child[p]; !b1 && c < first_child[p + 1]; ++c) b1 = color[c] != color[p];
    if (b1) state[p] = BoundaryRole::kB1;
  }
  SelectiveSubset result{{}, Method::kTree};
  if (std::none_of(state.begin(), state.end(), [](BoundaryRole r) { return r == BoundaryRole::kB1; })) {
    result.members = {root};
    return result;
  }
  // A vertex outside b1 has only same-colored neighbours, all in its block.
  for (std::uint32_t p = 0; p < n; ++p) {
    if (state[p] != BoundaryRole::kInterior) continue;
    bool near = parent[p] != kNone && state[parent[p]] == BoundaryRole::kB1;
    for (std::uint32_t c = first_child[p]; !near && c < first_child[p + 1]; ++c) near = state[c] == BoundaryRole::kB1;
    if (near) state[p] = BoundaryRole::kB2;
  }

  // From here on kInterior means "not (or no longer) in any ball subtree".
  auto in_same_subtree = [&](std::uint32_t x, std::uint32_t of) {
    return x != kNone && state[x] != BoundaryRole::kInterior && color[x] == color[of];
  };

  // Reverse BFS order is deepest first. Within one depth the order does not
  // matter: handling u touches only u's parent, the parent's children and
  // the grandparent, and two vertices of equal depth never share children.
  std::vector<bool> picked(n, false);
  for (std::uint32_t u = static_cast<std::uint32_t>(n); u-- > 0;) {
    if (state[u] == BoundaryRole::kInterior) continue;
    if (state[u] == BoundaryRole::kB2) {
      state[u] = BoundaryRole::kInterior;
      continue;
    }
    const std::uint32_t v = parent[u];
    if (!in_same_subtree(v, u)) {
      picked[order[u]] = true;
      state[u] = BoundaryRole::kInterior;
      continue;
    }
    picked[order[v]] = true;
    for (std::uint32_t c = first_child[v]; c < first_child[v + 1]; ++c) {
      if (in_same_subtree(c, u)) state[c] = BoundaryRole::kInterior;
    }
    state[v] = BoundaryRole::kInterior;
    const std::uint32_t w = parent[v];
    if (in_same_subtree(w, u) && state[w] == BoundaryRole::kB1) state[w] = BoundaryRole::kB2;
  }

  // Ascending ids without a comparison sort.
  for (Vertex v = 0; v < n; ++v) {
    if (picked[v]) result.members.push_back(v);
  }
  return result;
}

}  // namespace selset
