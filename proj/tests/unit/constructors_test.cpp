#include <gtest/gtest.h>

#include <set>

#include "cfedge/bfs.hpp"
#include "cfedge/classify.hpp"
#include "cfedge/constructors.hpp"
#include "cfedge/generators.hpp"
#include "oracles.hpp"

using namespace cfedge;

namespace {

Vertex first_leaf(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) return v;
  }
  return 0;
}

// Graph on the non-isolated vertices of g.
Graph strip_isolated(const Graph& g) {
  std::vector<EdgeId> all(g.edge_count());
  for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  return edge_subgraph(g, all).graph;
}

void expect_tree_palette_shapes(const Graph& t, const EdgeColouring& c, Vertex leaf) {
  const BfsTree bfs = bfs_tree(t, leaf);
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    const std::size_t i = bfs.level[u];
    if (i == 0) continue;
    const Palette p = vertex_palette(t, c, u);
    EXPECT_EQ(p.count((i - 1) % 3), 1u);
    EXPECT_EQ(p.count((i - 1) % 3) + p.count(i % 3), p.total());
  }
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    Vertex u = t.edge(e).u;
    if (bfs.level[t.edge(e).v] < bfs.level[u]) u = t.edge(e).v;
    const std::size_t i = bfs.level[u];
    if (i == 0) continue;
    const Palette p = edge_palette(t, c, e);
    EXPECT_EQ(p.count((i - 1) % 3), 1u);
    EXPECT_EQ(p.count((i - 1) % 3) + p.count(i % 3) + p.count((i + 1) % 3), p.total());
  }
}

}  // namespace

TEST(CeilLog2, Values) {
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(3), 2u);
  EXPECT_EQ(ceil_log2(4), 2u);
  EXPECT_EQ(ceil_log2(5), 3u);
  EXPECT_EQ(ceil_log2(64), 6u);
}

TEST(TreeColouring, LevelColours) {
  const Graph p = path_graph(5);
  EXPECT_EQ(colour_tree(p, Vertex{0}), EdgeColouring::full({0, 1, 2, 0}));
  const Graph t = complete_binary_tree(3);
  const Vertex leaf = first_leaf(t);
  const auto c = colour_tree(t, leaf);
  EXPECT_TRUE(verify(t, c).satisfied);
  EXPECT_LE(c.colours_used(), 3u);
  expect_tree_palette_shapes(t, c, leaf);
}

TEST(TreeColouring, RandomTreesSatisfyPaletteShapes) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph t = random_tree(2 + seed % 40, seed);
    const Vertex leaf = first_leaf(t);
    const auto c = colour_tree(t, leaf);
    ASSERT_TRUE(verify(t, c).satisfied) << seed;
    EXPECT_LE(c.colours_used(), 3u);
    expect_tree_palette_shapes(t, c, leaf);
  }
}

TEST(TreeColouring, Preconditions) {
  EXPECT_THROW(colour_tree(cycle_graph(4), Vertex{0}), PreconditionError);
  EXPECT_THROW(colour_tree(complete_bipartite_graph(1, 3), Vertex{0}), PreconditionError);
  EXPECT_THROW(colour_tree(Graph::from_edges(1, {}), Vertex{0}), PreconditionError);
}

TEST(CycleColouring, TwoColoursForAllLengths) {
  for (std::size_t k = 3; k <= 30; ++k) {
    const Graph c = cycle_graph(k);
    const auto col = colour_cycle(c);
    EXPECT_TRUE(verify(c, col).satisfied) << k;
    EXPECT_EQ(col.colours_used(), 2u);
  }
  EXPECT_THROW(colour_cycle(path_graph(4)), PreconditionError);
}

TEST(CompleteBipartite, PartialUsesTwoColours) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const Graph g = complete_bipartite_graph(n, m);
      const auto c = colour_complete_bipartite_partial(g);
      EXPECT_TRUE(verify(g, c).satisfied) << n << "," << m;
      EXPECT_LE(c.colours_used(), 2u);
    }
  }
}

TEST(CompleteBipartite, FullMatchesKnownValues) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const Graph g = complete_bipartite_graph(n, m);
      const auto c = colour_complete_bipartite_full(g);
      ASSERT_TRUE(c.fully_assigned());
      EXPECT_TRUE(verify(g, c).satisfied) << n << "," << m;
      const std::size_t lo = std::min(n, m);
      const std::size_t expected = lo >= 3 ? 3 : (n * m == 1 ? 1 : 2);
      EXPECT_EQ(c.colours_used(), expected) << n << "," << m;
    }
  }
  EXPECT_THROW(colour_complete_bipartite_full(cycle_graph(6)), PreconditionError);
}

TEST(BipartiteColouring, CycleOfLengthFour) {
  const Graph c4 = cycle_graph(4);
  const auto c = colour_bipartite(c4);
  EXPECT_TRUE(verify(c4, c).satisfied);
  EXPECT_LE(c.colours_used(), 3u);
}

TEST(BipartiteColouring, RandomInstancesAndAudit) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph raw = random_bipartite(2 + seed % 10, 2 + (seed / 10) % 10, 0.3, seed);
    if (raw.edge_count() == 0) continue;
    const Graph g = strip_isolated(raw);
    const auto c = colour_bipartite(g);
    const auto r = verify(g, c);
    ASSERT_TRUE(r.satisfied) << seed;
    for (const auto& x : c.assignment()) {
      if (x) EXPECT_LE(*x, 2u);
    }
    for (const auto& comp : connected_components(g)) {
      const auto audit = audit_bipartite_split(comp.graph);
      EXPECT_EQ(audit.cross_edge_violations, 0u);
      EXPECT_EQ(audit.level_violations, 0u);
    }
    bool isolated_edge = false;
    for (const Edge& e : g.edges()) isolated_edge = isolated_edge || (g.degree(e.u) == 1 && g.degree(e.v) == 1);
    if (!isolated_edge) EXPECT_LE(complete_with_fresh_colour(g, c).colours_used(), 4u);
    ++checked;
  }
  EXPECT_GT(checked, 250u);
}

TEST(BipartiteColouring, AuditOfEvenCycleSplit) {
  const auto audit = audit_bipartite_split(cycle_graph(6));
  EXPECT_EQ(audit.root, 0u);
  ASSERT_TRUE(audit.last_neighbour.has_value());
  EXPECT_EQ(*audit.last_neighbour, 5u);
  EXPECT_EQ(audit.cross_edge_violations, 0u);
  EXPECT_EQ(audit.level_violations, 0u);
  EXPECT_FALSE(audit_bipartite_split(path_graph(4)).last_neighbour.has_value());
}

TEST(BipartiteColouring, Preconditions) {
  EXPECT_THROW(colour_bipartite(cycle_graph(5)), PreconditionError);
  EXPECT_THROW(colour_bipartite(Graph::from_edges(3, {{0, 1}})), PreconditionError);
}

TEST(VertexColouring, ExactMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gnp(8, 0.2 + 0.01 * static_cast<double>(seed), seed);
    const auto pvc = proper_vertex_colouring(g, PvcStrategy::exact);
    EXPECT_TRUE(is_proper(g, pvc));
    EXPECT_EQ(static_cast<int>(pvc.k), oracle::chromatic_brute(8, oracle::edges_of(g))) << seed;
  }
  EXPECT_EQ(proper_vertex_colouring(petersen_graph(), PvcStrategy::exact).k, 3u);
  EXPECT_EQ(proper_vertex_colouring(complete_graph(7), PvcStrategy::exact).k, 7u);
}

TEST(VertexColouring, DsaturIsProperAndCeilingIsEnforced) {
  const Graph g = gnp(40, 0.3, 1);
  const auto pvc = proper_vertex_colouring(g, PvcStrategy::dsatur);
  EXPECT_TRUE(is_proper(g, pvc));
  EXPECT_THROW(proper_vertex_colouring(g, PvcStrategy::exact, 20), PreconditionError);
  EXPECT_EQ(proper_vertex_colouring(cycle_graph(6), PvcStrategy::dsatur).k, 2u);
}

TEST(GeneralColouring, PetersenWithinSixColours) {
  const Graph p = petersen_graph();
  const auto pvc = proper_vertex_colouring(p, PvcStrategy::exact);
  GeneralColouringTrace trace;
  const auto c = colour_general(p, pvc, &trace);
  EXPECT_TRUE(verify(p, c).satisfied);
  EXPECT_LE(c.colours_used(), 6u);
  EXPECT_EQ(trace.layer_edges.size(), 2u);
}

TEST(GeneralColouring, BoundOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph raw = gnp(6 + seed % 12, seed % 2 ? 0.5 : 0.25, seed);
    if (raw.edge_count() == 0) continue;
    const Graph g = strip_isolated(raw);
    const auto pvc = proper_vertex_colouring(g, PvcStrategy::exact);
    GeneralColouringTrace trace;
    const auto c = colour_general(g, pvc, &trace);
    ASSERT_TRUE(verify(g, c).satisfied) << seed;
    EXPECT_LE(c.colours_used(), 3 * ceil_log2(pvc.k));
    EXPECT_EQ(trace.layer_edges.size(), ceil_log2(pvc.k));
    std::size_t total = 0;
    for (auto x : trace.layer_edges) total += x;
    EXPECT_EQ(total, g.edge_count());
  }
}

TEST(GeneralColouring, RejectsImproperInput) {
  ProperVertexColouring bad{{0, 0, 1}, 2};
  EXPECT_THROW(colour_general(path_graph(3), bad), PreconditionError);
}

TEST(CompleteColouring, LogarithmicBound) {
  for (std::size_t n = 2; n <= 40; ++n) {
    const Graph k = complete_graph(n);
    const auto c = colour_complete(k);
    ASSERT_TRUE(verify(k, c).satisfied) << n;
    EXPECT_LE(c.colours_used(), 2 * ceil_log2(n));
  }
  EXPECT_THROW(colour_complete(cycle_graph(4)), PreconditionError);
}

TEST(AutoColouring, Dispatch) {
  EXPECT_EQ(colour_auto(cycle_graph(7)).report.construction, "cycle");
  EXPECT_EQ(colour_auto(complete_graph(5)).report.construction.rfind("complete", 0), 0u);
  EXPECT_NE(colour_auto(petersen_graph()).report.construction.find("general"), std::string::npos);
}

TEST(AutoColouring, FullAndWithinBoundOnManyInstances) {
  std::size_t instances = 0;
  auto check = [&](const Graph& raw) {
    if (raw.edge_count() == 0) return;
    const Graph g = strip_isolated(raw);
    const auto r = colour_auto(g);
    ASSERT_TRUE(r.colouring.fully_assigned());
    ASSERT_TRUE(verify(g, r.colouring).satisfied);
    EXPECT_LE(r.report.colours_used, r.report.bound_cf);
    if (r.report.delta_bound_applies) EXPECT_LE(r.report.colours_used, r.report.bound_delta);
    ++instances;
  };
  for (std::uint64_t seed = 0; seed < 200; ++seed) check(gnp(4 + seed % 16, 0.3, seed));
  for (std::uint64_t seed = 0; seed < 150; ++seed) check(random_tree(2 + seed % 30, seed));
  for (std::uint64_t seed = 0; seed < 150; ++seed) check(random_bipartite(3 + seed % 6, 3 + seed % 7, 0.4, seed));
  for (std::size_t k = 3; k <= 12; ++k) check(cycle_graph(k));
  for (std::size_t n = 2; n <= 12; ++n) check(complete_graph(n));
  check(petersen_graph());
  check(gnp(60, 0.2, 3));
  EXPECT_GE(instances, 500u);
}

TEST(AutoColouring, DisconnectedInputWithIsolatedEdgeComponent) {
  const Graph g = Graph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
  const auto r = colour_auto(g);
  EXPECT_TRUE(r.colouring.fully_assigned());
  EXPECT_TRUE(verify(g, r.colouring).satisfied);
}
