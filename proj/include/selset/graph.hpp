#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace selset {

// Vertices and colors are 0-based in the C++ API. Every text format uses
// 1-based ids; conversion happens only in the readers and writers.
using Vertex = std::uint32_t;
using Color = std::uint32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct Edge {
  Vertex u;
  Vertex v;
};

// Connected, simple, undirected graph with one color per vertex. Every
// color in [0, num_colors()) is used by at least one vertex. Immutable
// after construction; adjacency is stored in CSR form, each list sorted.
class ColoredGraph {
 public:
  // Throws FormatError on self-loops, duplicate edges, out-of-range
  // endpoints, unused colors, an empty vertex set or a disconnected graph.
  ColoredGraph(std::vector<Color> colors, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return colors_.size(); }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  std::size_t num_colors() const noexcept { return num_colors_; }

  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const noexcept { return colors_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool contains(Vertex v) const noexcept { return v < num_vertices(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_tree() const noexcept { return num_edges() + 1 == num_vertices(); }

  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<Color> colors_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t num_colors_ = 0;
};

// A maximal connected monochromatic vertex set.
struct Block {
  std::uint32_t id;
  Color color;
  VertexSet members;
};

struct BlockDecomposition {
  std::vector<Block> blocks;              // ordered by smallest member
  std::vector<std::uint32_t> block_of;    // vertex -> block id
};

enum class Method { kTree, kInterval, kGreedy, kBrute, kManual };

std::string_view to_string(Method method);

struct SelectiveSubset {
  VertexSet members;
  Method method = Method::kManual;

  std::size_t size() const noexcept { return members.size(); }
};

struct Selectivity {
  bool selective = false;
  std::optional<Vertex> witness;  // smallest violating vertex when not selective

  explicit operator bool() const noexcept { return selective; }
};

// Length of a shortest u-v path in edges.
std::size_t hop_distance(const ColoredGraph& graph, Vertex u, Vertex v);

// Members of `candidates` at minimum hop-distance from v. Returns {v} when
// v is itself a candidate. Throws on an empty candidate set.
VertexSet nearest_set(const ColoredGraph& graph, Vertex v, std::span<const Vertex> candidates);

BlockDecomposition decompose_blocks(const ColoredGraph& graph);
std::vector<Block> blocks(const ColoredGraph& graph);

// Checks that every vertex v of color l has a same-colored vertex among its
// nearest neighbours in subset + (V \ V_l). One truncated BFS per vertex:
// O(n(n+m)) in the worst case, far less when blocks are small.
Selectivity is_selective(const ColoredGraph& graph, std::span<const Vertex> subset);

// Number of blocks; no selective subset is smaller.
std::size_t block_lower_bound(const ColoredGraph& graph);

// Sorts and validates a list of vertex ids against the graph.
VertexSet make_vertex_set(const ColoredGraph& graph, std::span<const Vertex> vertices);

// Text formats.
//
//   graph:   p mss <n> <m> <c>  /  v <id> <color>  /  e <u> <v>
//   subset:  whitespace-separated vertex ids
//
// '#' starts a comment line in both.
ColoredGraph parse_graph(std::istream& in);
ColoredGraph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const ColoredGraph& graph);

VertexSet parse_subset(std::istream& in, std::size_t num_vertices);
VertexSet parse_subset(std::string_view text, std::size_t num_vertices);
void write_subset(std::ostream& out, std::span<const Vertex> subset);

}  // namespace selset
