#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "selset/exact.hpp"
#include "selset/hardness.hpp"

using namespace selset;

namespace {

const char* kSixClauses =
    "c six variables, three positive and three negative clauses\n"
    "p cnf 6 6\n"
    "1 2 3 0\n1 3 4 0\n4 5 6 0\n-1 -3 -4 0\n-1 -4 -6 0\n-4 -5 -6 0\n";

Assignment bits(std::initializer_list<int> values) {
  Assignment a;
  for (int v : values) a.push_back(v != 0);
  return a;
}

}  // namespace

TEST(ParseCnf, Examples) {
  const MonotoneCnf cnf = parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(cnf.num_vars, 3u);
  ASSERT_EQ(cnf.clauses.size(), 1u);
  EXPECT_TRUE(cnf.clauses[0].positive);
  EXPECT_EQ(cnf.clauses[0].vars, (std::array<std::uint32_t, 3>{0, 1, 2}));

  using fixtures::format_error_of;
  EXPECT_EQ(format_error_of([] { parse_monotone_cnf("p cnf 3 1\n1 -2 3 0\n"); }), FormatErrc::kMixedPolarity);
  EXPECT_EQ(format_error_of([] { parse_monotone_cnf("p cnf 2 1\n1 2 0\n"); }), FormatErrc::kClauseSize);
  EXPECT_EQ(format_error_of([] { parse_monotone_cnf("p cnf 3 1\n1 1 3 0\n"); }), FormatErrc::kRepeatedVariable);
  EXPECT_EQ(format_error_of([] { parse_monotone_cnf("p cnf 3 1\n1 2 4 0\n"); }), FormatErrc::kVariableOutOfRange);
  EXPECT_EQ(format_error_of([] { parse_monotone_cnf("p cnf 3 2\n1 2 3 0\n"); }), FormatErrc::kCountMismatch);
}

TEST(ParseCnf, ClauseAcrossLinesAndWriteBack) {
  const MonotoneCnf cnf = parse_monotone_cnf("p cnf 4 2\n1 2\n3 0 -2 -3 -4 0\n");
  ASSERT_EQ(cnf.clauses.size(), 2u);
  EXPECT_FALSE(cnf.clauses[1].positive);
  std::ostringstream out;
  write_cnf(out, cnf);
  const MonotoneCnf back = parse_monotone_cnf(out.str());
  EXPECT_EQ(back.clauses.size(), 2u);
  EXPECT_EQ(back.clauses[1].vars, cnf.clauses[1].vars);
}

TEST(Reduction, CountsForSixVariableFormula) {
  const Reduction r = reduce_to_graph(parse_monotone_cnf(kSixClauses));
  EXPECT_EQ(r.graph.num_vertices(), 54u);
  EXPECT_EQ(r.graph.num_edges(), 78u);
  EXPECT_EQ(r.graph.num_colors(), 2u);
}

TEST(Reduction, CountsForSingleClause) {
  const Reduction r = reduce_to_graph(parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n"));
  EXPECT_EQ(r.graph.num_vertices(), 21u);
  EXPECT_EQ(r.graph.num_edges(), 29u);
}

TEST(Reduction, GadgetEdges) {
  const Reduction r = reduce_to_graph(parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n"));
  for (const VariableGadget& v : r.map.variables) {
    std::size_t inside = 0;
    std::vector<Vertex> all(v.positive.begin(), v.positive.end());
    all.insert(all.end(), v.negative.begin(), v.negative.end());
    for (Vertex a : all) {
      for (Vertex b : all) inside += (a < b && r.graph.has_edge(a, b)) ? 1 : 0;
    }
    EXPECT_EQ(inside, 8u);
    EXPECT_EQ(r.graph.color(v.positive[0]), kRed);
    EXPECT_EQ(r.graph.color(v.positive[1]), kBlue);
    EXPECT_EQ(r.graph.color(v.positive[2]), kBlue);
  }
  const auto& c = r.map.clauses[0];
  EXPECT_TRUE(r.graph.has_edge(c[0], c[1]));
  EXPECT_TRUE(r.graph.has_edge(c[1], c[2]));
  EXPECT_EQ(r.graph.degree(c[2]), 4u);
  for (const VariableGadget& v : r.map.variables) EXPECT_TRUE(r.graph.has_edge(c[2], v.positive[2]));
}

TEST(Reduction, DistinctClauseColors) {
  const MonotoneCnf cnf = parse_monotone_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  const Reduction r = reduce_to_graph(cnf, ClauseColoring::kDistinct);
  EXPECT_EQ(r.graph.num_colors(), 4u);
  EXPECT_EQ(r.graph.color(r.map.clauses[0][0]), 2u);
  EXPECT_EQ(r.graph.color(r.map.clauses[1][1]), 3u);
  EXPECT_EQ(r.graph.color(r.map.clauses[1][2]), kBlue);
  EXPECT_EQ(r.graph.num_edges(), 8u * 3 + 5u * 2);
}

TEST(Reduction, UnusedVariableIsDisconnected) {
  EXPECT_EQ(fixtures::format_error_of([] { reduce_to_graph(parse_monotone_cnf("p cnf 4 1\n1 2 3 0\n")); }),
            FormatErrc::kDisconnected);
}

TEST(AssignmentToSubset, SixVariableFormula) {
  const MonotoneCnf cnf = parse_monotone_cnf(kSixClauses);
  const Reduction r = reduce_to_graph(cnf);
  const Assignment a = bits({1, 1, 0, 0, 0, 1});
  const VertexSet s = assignment_to_subset(cnf, a, r.map);
  EXPECT_EQ(s.size(), 18u);
  EXPECT_TRUE(is_selective(r.graph, s).selective);
  EXPECT_EQ(subset_to_assignment(r.graph, cnf, s, r.map), a);
}

TEST(AssignmentToSubset, SingleClause) {
  const MonotoneCnf cnf = parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n");
  const Reduction r = reduce_to_graph(cnf);
  const VertexSet s = assignment_to_subset(cnf, bits({1, 0, 0}), r.map);
  const auto& x = r.map.variables;
  VertexSet expect = {x[0].positive[0], x[0].positive[2], x[1].negative[0], x[1].negative[2],
                      x[2].negative[0], x[2].negative[2], r.map.clauses[0][0]};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(s, expect);
  EXPECT_TRUE(is_selective(r.graph, s).selective);
  EXPECT_EQ(subset_to_assignment(r.graph, cnf, s, r.map), bits({1, 0, 0}));
}

TEST(AssignmentToSubset, RejectsFailingAssignment) {
  const MonotoneCnf cnf = parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(fixtures::precondition_error_of(
                [&] { assignment_to_subset(cnf, bits({0, 0, 0}), make_vertex_map(3, 1)); }),
            PreconditionErrc::kUnsatisfied);
}

TEST(SubsetToAssignment, RejectsNonCanonicalSubsets) {
  const MonotoneCnf cnf = parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n");
  const Reduction r = reduce_to_graph(cnf);
  const auto& x = r.map.variables;
  // All negative anchors: the positive clause has no true literal, so the
  // subset cannot be selective.
  VertexSet all_false = {x[0].negative[0], x[0].negative[2], x[1].negative[0], x[1].negative[2],
                         x[2].negative[0], x[2].negative[2], r.map.clauses[0][0]};
  std::sort(all_false.begin(), all_false.end());
  EXPECT_EQ(fixtures::precondition_error_of([&] { subset_to_assignment(r.graph, cnf, all_false, r.map); }),
            PreconditionErrc::kNotSelective);

  VertexSet everything(r.graph.num_vertices());
  for (Vertex v = 0; v < everything.size(); ++v) everything[v] = v;
  EXPECT_EQ(fixtures::precondition_error_of([&] { subset_to_assignment(r.graph, cnf, everything, r.map); }),
            PreconditionErrc::kWrongSize);

  EXPECT_EQ(fixtures::precondition_error_of(
                [&] { subset_to_assignment(r.graph, cnf, everything, make_vertex_map(2, 1)); }),
            PreconditionErrc::kMapMismatch);
}

TEST(SubsetToAssignment, EveryOptimumOfSmallFormulasDecodes) {
  // Exact optima need not be canonical in membership, but at size 2n + m
  // each one must decode to a satisfying assignment.
  oracle::SplitMix rng(3);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const MonotoneCnf cnf = oracle::random_cnf(3 + rng.below(2), 1 + rng.below(3), rng);
    if (!oracle::reduction_connected(cnf)) continue;
    const Reduction r = reduce_to_graph(cnf);
    const SelectiveSubset s = exact_mss(r.graph);
    ASSERT_EQ(s.size(), 2 * cnf.num_vars + cnf.clauses.size());
    EXPECT_TRUE(satisfies(cnf, subset_to_assignment(r.graph, cnf, s.members, r.map)));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(SubsetToAssignment, UnsatisfiableFormulaNeedsMore) {
  // Every positive and negative triple over five variables.
  MonotoneCnf cnf{5, {}};
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = a + 1; b < 5; ++b)
      for (std::uint32_t c = b + 1; c < 5; ++c) {
        cnf.clauses.push_back({{a, b, c}, true});
        cnf.clauses.push_back({{a, b, c}, false});
      }
  ASSERT_FALSE(oracle::brute_sat(cnf).has_value());
  const Reduction r = reduce_to_graph(cnf);
  EXPECT_EQ(r.graph.num_vertices(), 6u * 5 + 3u * 20);
  const SelectiveSubset s = exact_mss(r.graph, {64, SearchSpace::kBoundaryOnly});
  EXPECT_GT(s.size(), 2 * cnf.num_vars + cnf.clauses.size());
  EXPECT_TRUE(is_selective(r.graph, s.members).selective);
}

TEST(MapFile, RoundTrip) {
  const VertexMap map = make_vertex_map(3, 2);
  std::ostringstream out;
  write_vertex_map(out, map);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_vertex_map(in), map);
}

TEST(AssignmentFile, RoundTrip) {
  const Assignment a = bits({1, 0, 1, 1});
  std::ostringstream out;
  write_assignment(out, a);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_assignment(in, 4), a);
}
