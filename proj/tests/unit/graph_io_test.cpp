#include <gtest/gtest.h>

#include "cfedge/generators.hpp"
#include "cfedge/graph_io.hpp"

using namespace cfedge;

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(emit_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(emit_graph6(Graph::from_edges(2, {{0, 1}})), "A_");
  EXPECT_EQ(emit_graph6(Graph::from_edges(2, {})), "A?");
  EXPECT_EQ(emit_graph6(Graph::from_edges(0, {})), "?");
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph6, LongSizeHeader) {
  const Graph g = path_graph(63);
  const std::string s = emit_graph6(g);
  ASSERT_GE(s.size(), 4u);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
  const Graph big = path_graph(300);
  EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(Graph6, RejectsNonzeroPadding) {
  try {
    parse_graph6("A@");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
}

TEST(Graph6, RejectsTruncationAndGarbage) {
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("Bww"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B\x01"), ParseError);
}

TEST(Graph6, RoundTripRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gnp(1 + seed % 40, 0.3, seed);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g) << seed;
  }
}

TEST(Edgelist, RoundTripAndFormat) {
  const Graph g = cycle_graph(4);
  const std::string text = emit_edgelist(g);
  EXPECT_EQ(text, "4 4\n0 1\n1 2\n2 3\n0 3\n");
  EXPECT_EQ(parse_edgelist(text), g);
  EXPECT_EQ(parse_edgelist("2 1\n0 1"), Graph::from_edges(2, {{0, 1}}));
  EXPECT_EQ(parse_edgelist("2 1\n0 1\n\n\n"), Graph::from_edges(2, {{0, 1}}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph h = gnp(15, 0.2, seed);
    EXPECT_EQ(parse_graph(emit_graph(h, GraphFormat::edgelist), GraphFormat::edgelist), h);
  }
}

TEST(Edgelist, Errors) {
  EXPECT_THROW(parse_edgelist("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 0\n"), GraphError);
  EXPECT_THROW(parse_edgelist("3 1\n0 1\nxyz\n"), ParseError);
  try {
    parse_edgelist("3 1\n0 1\n9 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_format_name("g6"), GraphFormat::graph6);
  EXPECT_EQ(parse_format_name("graph6"), GraphFormat::graph6);
  EXPECT_EQ(parse_format_name("edgelist"), GraphFormat::edgelist);
  EXPECT_THROW(parse_format_name("dimacs"), GraphError);
}
