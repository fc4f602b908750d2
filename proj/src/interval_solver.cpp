#include "selset/interval_solver.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "selset/boundary.hpp"
#include "selset/error.hpp"
#include "text.hpp"

namespace selset {

namespace {

// Ids ordered by left endpoint, equal lefts by id.
std::vector<Vertex> sorted_by_left(const UnitIntervalInstance& instance) {
  std::vector<std::pair<std::int64_t, Vertex>> keyed(instance.intervals.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) keyed[i] = {instance.intervals[i].left, static_cast<Vertex>(i)};
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> order(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) order[i] = keyed[i].second;
  return order;
}

}  // namespace

ColoredGraph build_interval_graph(const UnitIntervalInstance& instance) {
  if (instance.intervals.empty()) throw FormatError(FormatErrc::kEmptyGraph, 0, "no intervals");
  if (instance.unit_length <= 0) {
    throw FormatError(FormatErrc::kInvalidUnitLength, 0,
                      "unit length " + std::to_string(instance.unit_length) + " is not positive");
  }
  const auto order = sorted_by_left(instance);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::int64_t reach = instance.intervals[order[i]].left + instance.unit_length;
    for (std::size_t j = i + 1; j < order.size() && instance.intervals[order[j]].left <= reach; ++j) {
      edges.push_back({std::min(order[i], order[j]), std::max(order[i], order[j])});
    }
  }
  std::vector<Color> colors;
  colors.reserve(instance.intervals.size());
  for (const Interval& iv : instance.intervals) colors.push_back(iv.color);
  return ColoredGraph(std::move(colors), edges);
}

SelectiveSubset solve_unit_interval(const UnitIntervalInstance& instance) {
  // Everything below works on positions in left-endpoint order, where every
  // neighbourhood is a contiguous range; no graph is built.
  const std::size_t n = instance.intervals.size();
  if (n == 0) throw FormatError(FormatErrc::kEmptyGraph, 0, "no intervals");
  const std::int64_t unit = instance.unit_length;
  if (unit <= 0) {
    throw FormatError(FormatErrc::kInvalidUnitLength, 0, "unit length " + std::to_string(unit) + " is not positive");
  }
  const auto order = sorted_by_left(instance);
  std::vector<std::int64_t> left(n);
  std::vector<Color> color(n);
  Color max_color = 0;
  for (std::size_t p = 0; p < n; ++p) {
    left[p] = instance.intervals[order[p]].left;
    color[p] = instance.intervals[order[p]].color;
    max_color = std::max(max_color, color[p]);
    if (p > 0 && left[p] - left[p - 1] > unit) {
      throw FormatError(FormatErrc::kDisconnected, 0,
                        "gap between intervals " + std::to_string(order[p - 1] + 1) + " and " +
                            std::to_string(order[p] + 1));
    }
  }
  std::vector<bool> used(std::size_t{max_color} + 1, false);
  for (Color c : color) used[c] = true;
  if (auto gap = std::find(used.begin(), used.end(), false); gap != used.end()) {
    throw FormatError(FormatErrc::kUnusedColor, 0,
                      "color " + std::to_string(gap - used.begin() + 1) + " is not used by any interval");
  }

  SelectiveSubset result{{}, Method::kInterval};
  if (max_color == 0) {
    result.members = {order.front()};
    return result;
  }

  // Neighbourhood of p is [lo[p], hi[p]].
  std::vector<std::size_t> lo(n), hi(n);
  for (std::size_t p = 0, q = 0; p < n; ++p) {
    while (left[p] - left[q] > unit) ++q;
    lo[p] = q;
  }
  for (std::size_t p = n, q = n; p-- > 0;) {
    while (left[q - 1] - left[p] > unit) --q;
    hi[p] = q - 1;
  }

  // b1: some interval of another color in range. Nearest such position on
  // each side decides it.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<BoundaryRole> state(n, BoundaryRole::kInterior);
  std::vector<bool> picked(n, false);
  {
    std::vector<std::size_t> next_other(n, kNone);
    for (std::size_t p = n - 1; p-- > 0;) {
      next_other[p] = color[p + 1] != color[p] ? p + 1 : next_other[p + 1];
    }
    std::size_t prev_other = kNone;
    for (std::size_t p = 0; p < n; ++p) {
      if (p > 0 && color[p - 1] != color[p]) prev_other = p - 1;
      const bool left_hit = prev_other != kNone && prev_other >= lo[p];
      const bool right_hit = next_other[p] != kNone && next_other[p] <= hi[p];
      if (left_hit || right_hit) state[p] = BoundaryRole::kB1;
    }
  }
  // b2: not b1, with a b1 interval in range (necessarily the same color).
  std::vector<std::size_t> b1_before(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) b1_before[p + 1] = b1_before[p] + (state[p] == BoundaryRole::kB1 ? 1 : 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (state[p] == BoundaryRole::kInterior && b1_before[hi[p] + 1] > b1_before[lo[p]]) state[p] = BoundaryRole::kB2;
  }

  // Blocks: within one color, consecutive intervals at most L apart share a
  // block. Ball positions are grouped by block, keeping sweep order.
  std::vector<std::uint32_t> block_of(n);
  std::uint32_t num_blocks = 0;
  {
    std::vector<std::size_t> last_of_color(std::size_t{max_color} + 1, kNone);
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t q = last_of_color[color[p]];
      block_of[p] = (q != kNone && left[p] - left[q] <= unit) ? block_of[q] : num_blocks++;
      last_of_color[color[p]] = p;
    }
  }
  std::vector<std::size_t> start(std::size_t{num_blocks} + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (state[p] != BoundaryRole::kInterior) ++start[block_of[p] + 1];
  }
  for (std::size_t b = 0; b < num_blocks; ++b) start[b + 1] += start[b];
  std::vector<std::size_t> seq(start.back());
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t p = 0; p < n; ++p) {
      if (state[p] != BoundaryRole::kInterior) seq[fill[block_of[p]]++] = p;
    }
  }

  std::vector<std::size_t> group_start(seq.size());
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const std::size_t first = start[b];
    const std::size_t k = start[b + 1];
    for (std::size_t i = first; i < k; ++i) {
      group_start[i] = (i > first && left[seq[i]] == left[seq[i - 1]]) ? group_start[i - 1] : i;
    }

    // Remaining intervals are always the suffix seq[head..k).
    std::size_t head = first;
    std::size_t reach = first;
    std::size_t demoted_until = first;
    while (head < k) {
      const std::size_t u = seq[head];
      if (state[u] == BoundaryRole::kB2) {
        ++head;
        continue;
      }
      reach = std::max(reach, head);
      while (reach + 1 < k && left[seq[reach + 1]] <= left[u] + unit) ++reach;
      if (reach == head) {
        picked[order[u]] = true;
        ++head;
        continue;
      }
      const std::size_t chosen = std::max(group_start[reach], head + 1);
      const std::size_t v = seq[chosen];
      picked[order[v]] = true;
      head = chosen + 1;
      std::size_t i = std::max(demoted_until, head);
      for (; i < k && left[seq[i]] <= left[v] + unit; ++i) {
        if (state[seq[i]] == BoundaryRole::kB1) state[seq[i]] = BoundaryRole::kB2;
      }
      demoted_until = i;
    }
  }

  // Ascending ids without a comparison sort.
  for (Vertex v = 0; v < picked.size(); ++v) {
    if (picked[v]) result.members.push_back(v);
  }
  return result;
}

UnitIntervalInstance parse_unit_intervals(std::istream& in) {
  detail::LineReader reader(in);
  detail::Line line;
  if (!reader.next(line)) {
    throw FormatError(FormatErrc::kMalformedLine, reader.line_number(), "missing 'p uim' header");
  }
  if (line.tokens.size() != 5 || line.tokens[0] != "p" || line.tokens[1] != "uim") {
    throw FormatError(FormatErrc::kMalformedLine, line.number, "expected 'p uim <n> <c> <L>'");
  }
  const auto n = detail::parse_number<std::size_t>(line.tokens[2], line.number);
  const auto c = detail::parse_number<std::size_t>(line.tokens[3], line.number);
  const auto unit = detail::parse_number<std::int64_t>(line.tokens[4], line.number);
  if (n == 0) throw FormatError(FormatErrc::kEmptyGraph, line.number, "n must be positive");
  if (c == 0 || c > n) throw FormatError(FormatErrc::kCountMismatch, line.number, "c must be in 1..n");
  if (unit <= 0) throw FormatError(FormatErrc::kInvalidUnitLength, line.number, line.tokens[4]);

  UnitIntervalInstance instance;
  instance.unit_length = unit;
  instance.intervals.resize(n);
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  while (reader.next(line)) {
    if (line.tokens[0] != "i") {
      throw FormatError(FormatErrc::kMalformedLine, line.number, "unknown record '" + line.tokens[0] + "'");
    }
    detail::expect_tokens(line, 4, "'i <id> <left> <color>'");
    const auto id = detail::parse_number<std::size_t>(line.tokens[1], line.number);
    if (id < 1 || id > n) {
      throw FormatError(FormatErrc::kVertexOutOfRange, line.number,
                        "interval " + line.tokens[1] + " outside 1.." + std::to_string(n));
    }
    if (seen[id - 1]) throw FormatError(FormatErrc::kDuplicateVertex, line.number, "interval " + line.tokens[1]);
    const auto left = detail::parse_number<std::int64_t>(line.tokens[2], line.number);
    const auto color = detail::parse_number<std::size_t>(line.tokens[3], line.number);
    if (color < 1 || color > c) {
      throw FormatError(FormatErrc::kColorOutOfRange, line.number,
                        "color " + line.tokens[3] + " outside 1.." + std::to_string(c));
    }
    seen[id - 1] = true;
    instance.intervals[id - 1] = {left, static_cast<Color>(color - 1)};
    ++count;
  }
  if (count != n) {
    throw FormatError(FormatErrc::kCountMismatch, 0,
                      "declared " + std::to_string(n) + " intervals, found " + std::to_string(count));
  }
  std::vector<bool> used(c, false);
  for (const Interval& iv : instance.intervals) used[iv.color] = true;
  for (std::size_t col = 0; col < c; ++col) {
    if (!used[col]) {
      throw FormatError(FormatErrc::kUnusedColor, 0,
                        "declared " + std::to_string(c) + " colors but color " + std::to_string(col + 1) +
                            " is not used");
    }
  }
  return instance;
}

UnitIntervalInstance parse_unit_intervals(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_unit_intervals(in);
}

void write_unit_intervals(std::ostream& out, const UnitIntervalInstance& instance) {
  Color max_color = 0;
  for (const Interval& iv : instance.intervals) max_color = std::max(max_color, iv.color);
  out << "p uim " << instance.intervals.size() << ' ' << max_color + 1 << ' ' << instance.unit_length << '\n';
  for (std::size_t i = 0; i < instance.intervals.size(); ++i) {
    out << "i " << i + 1 << ' ' << instance.intervals[i].left << ' ' << instance.intervals[i].color + 1 << '\n';
  }
}

}  // namespace selset
