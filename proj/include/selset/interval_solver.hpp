#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "selset/graph.hpp"

namespace selset {

// Closed interval [left, left + unit_length]; the interval's id is its index.
struct Interval {
  std::int64_t left = 0;
  Color color = 0;
};

// Two intervals are adjacent iff their left endpoints differ by at most
// unit_length, so touching endpoints count as overlapping.
struct UnitIntervalInstance {
  std::int64_t unit_length = 1;
  std::vector<Interval> intervals;
};

// Overlap graph with ids and colors preserved. Throws FormatError when the
// instance is empty, has a non-positive unit length or unused colors, or
// when the overlap graph is disconnected.
ColoredGraph build_interval_graph(const UnitIntervalInstance& instance);

// Exact minimum selective subset by a left-to-right sweep over each
// block's ball, O(n) after sorting by left endpoint.
//
// Leftmost remaining u: a b2 vertex is dropped. For a b1 vertex, v is the
// remaining adjacent interval with the largest left endpoint (ties by
// smallest id); v is taken, v and every remaining interval starting left of
// v are removed, and b1 intervals starting in [left(v), left(v) + L] drop to
// b2. Without such a v, u is taken. A monochromatic instance yields the
// leftmost interval.
SelectiveSubset solve_unit_interval(const UnitIntervalInstance& instance);

// Interval file:  p uim <n> <c> <L>  /  i <id> <left> <color>
UnitIntervalInstance parse_unit_intervals(std::istream& in);
UnitIntervalInstance parse_unit_intervals(std::string_view text);
void write_unit_intervals(std::ostream& out, const UnitIntervalInstance& instance);

}  // namespace selset
