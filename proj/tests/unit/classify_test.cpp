#include <gtest/gtest.h>

#include "cfedge/classify.hpp"
#include "cfedge/generators.hpp"
#include "oracles.hpp"

using namespace cfedge;

TEST(Classify, Examples) {
  EXPECT_EQ(classify(complete_graph(3)).tag, ClassTag::complete);
  EXPECT_EQ(classify(cycle_graph(4)).tag, ClassTag::cycle);
  EXPECT_EQ(classify(cycle_graph(7)).tag, ClassTag::cycle);
  const GraphClass kb = classify(complete_bipartite_graph(4, 2));
  EXPECT_EQ(kb.tag, ClassTag::complete_bipartite);
  EXPECT_EQ(kb.side_a, 2u);
  EXPECT_EQ(kb.side_b, 4u);
  EXPECT_EQ(classify(complete_binary_tree(2)).tag, ClassTag::tree);
  EXPECT_EQ(classify(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}})).tag, ClassTag::bipartite);
  EXPECT_EQ(classify(petersen_graph()).tag, ClassTag::general);
}

TEST(Classify, PathsAndStarsAreTreesOrCompleteBipartite) {
  EXPECT_EQ(classify(path_graph(5)).tag, ClassTag::tree);
  EXPECT_EQ(classify(complete_bipartite_graph(1, 5)).tag, ClassTag::complete_bipartite);
  EXPECT_TRUE(is_tree(complete_bipartite_graph(1, 5)));
}

TEST(Classify, Predicates) {
  EXPECT_TRUE(is_complete(complete_graph(2)));
  EXPECT_FALSE(is_complete(Graph::from_edges(1, {})));
  EXPECT_TRUE(is_cycle(cycle_graph(3)));
  EXPECT_FALSE(is_cycle(path_graph(3)));
  EXPECT_FALSE(is_tree(cycle_graph(4)));
  EXPECT_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_complete_bipartite(cycle_graph(4)));
  EXPECT_FALSE(is_complete_bipartite(cycle_graph(6)));
  EXPECT_EQ(to_string(ClassTag::complete_bipartite), "complete_bipartite");
}

TEST(Classify, OddCycleWitnessIsAnOddCycleOfTheGraph) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gnp(9, 0.35, seed);
    OddCycle w;
    const auto bp = is_bipartite(g, &w);
    EXPECT_EQ(bp.has_value(), oracle::bipartite_brute(9, oracle::edges_of(g)));
    if (bp) {
      for (const Edge& e : g.edges()) EXPECT_NE(bp->side[e.u], bp->side[e.v]);
      continue;
    }
    ASSERT_GE(w.cycle.size(), 3u);
    EXPECT_EQ(w.cycle.size() % 2, 1u);
    for (std::size_t i = 0; i < w.cycle.size(); ++i) {
      EXPECT_TRUE(g.adjacent(w.cycle[i], w.cycle[(i + 1) % w.cycle.size()]));
    }
  }
}
