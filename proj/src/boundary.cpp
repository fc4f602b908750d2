#include "selset/boundary.hpp"

#include <algorithm>
#include <string>

#include "selset/error.hpp"

namespace selset {

namespace {

bool touches_other_color(const ColoredGraph& graph, Vertex v) {
  for (Vertex w : graph.neighbors(v)) {
    if (graph.color(w) != graph.color(v)) return true;
  }
  return false;
}

void validate_block(const ColoredGraph& graph, const Block& block) {
  auto fail = [&](const std::string& why) {
    throw PreconditionError(PreconditionErrc::kNotABlock, "block " + std::to_string(block.id + 1) + ": " + why);
  };
  if (block.members.empty()) fail("no members");
  std::vector<bool> member(graph.num_vertices(), false);
  for (Vertex v : block.members) {
    if (!graph.contains(v)) fail("vertex outside graph");
    if (member[v]) fail("repeated member");
    if (graph.color(v) != block.color) fail("member " + std::to_string(v + 1) + " has another color");
    member[v] = true;
  }
  std::vector<Vertex> stack{block.members.front()};
  std::vector<bool> seen(graph.num_vertices(), false);
  seen[block.members.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : graph.neighbors(u)) {
      if (graph.color(w) != block.color) continue;
      if (!member[w]) fail("not maximal, vertex " + std::to_string(w + 1) + " can be added");
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (reached != block.members.size()) fail("members are not connected");
}

}  // namespace

std::vector<BoundaryRole> boundary_roles(const ColoredGraph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<BoundaryRole> roles(n, BoundaryRole::kInterior);
  for (Vertex v = 0; v < n; ++v) {
    if (touches_other_color(graph, v)) roles[v] = BoundaryRole::kB1;
  }
  // A vertex outside b1 has only same-colored neighbours, all in its block.
  for (Vertex v = 0; v < n; ++v) {
    if (roles[v] != BoundaryRole::kInterior) continue;
    for (Vertex w : graph.neighbors(v)) {
      if (roles[w] == BoundaryRole::kB1) {
        roles[v] = BoundaryRole::kB2;
        break;
      }
    }
  }
  return roles;
}

BoundaryPartition boundary_partition(const ColoredGraph& graph, const Block& block) {
  validate_block(graph, block);
  BoundaryPartition part;
  part.block_id = block.id;
  std::vector<bool> in_b1(graph.num_vertices(), false);
  for (Vertex v : block.members) {
    if (touches_other_color(graph, v)) {
      part.b1.push_back(v);
      in_b1[v] = true;
    }
  }
  for (Vertex v : block.members) {
    if (in_b1[v]) continue;
    for (Vertex w : graph.neighbors(v)) {
      if (in_b1[w]) {
        part.b2.push_back(v);
        break;
      }
    }
  }
  for (Vertex v : block.members) {
    if (in_b1[v] || std::binary_search(part.b2.begin(), part.b2.end(), v)) part.ball.push_back(v);
  }
  return part;
}

std::vector<BoundaryPartition> boundary_partitions(const ColoredGraph& graph,
                                                   const BlockDecomposition& decomposition) {
  const auto roles = boundary_roles(graph);
  std::vector<BoundaryPartition> out(decomposition.blocks.size());
  for (const Block& block : decomposition.blocks) {
    BoundaryPartition& part = out[block.id];
    part.block_id = block.id;
    for (Vertex v : block.members) {
      if (roles[v] == BoundaryRole::kB1) part.b1.push_back(v);
      if (roles[v] == BoundaryRole::kB2) part.b2.push_back(v);
      if (roles[v] != BoundaryRole::kInterior) part.ball.push_back(v);
    }
  }
  return out;
}

}  // namespace selset
