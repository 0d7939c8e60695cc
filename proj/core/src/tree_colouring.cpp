#include <algorithm>

#include "cfedge/classify.hpp"
#include "cfedge/constructors.hpp"

namespace cfedge {

unsigned ceil_log2(std::size_t k) {
  unsigned t = 0;
  while ((std::size_t{1} << t) < k) ++t;
  return t;
}

EdgeColouring colour_tree(const Graph& g, const BfsTree& t) {
  if (!is_tree(g) || g.vertex_count() < 2) throw PreconditionError("colour_tree needs a nontrivial tree");
  if (t.parent.size() != g.vertex_count()) throw PreconditionError("BFS tree does not belong to this graph");
  if (g.degree(t.root) != 1) {
    throw PreconditionError("colour_tree needs a leaf root; vertex " + std::to_string(t.root) + " has degree " +
                            std::to_string(g.degree(t.root)));
  }
  EdgeColouring c(g.edge_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (const auto& link = t.parent[x]) c.assign(link->edge, static_cast<Colour>((t.level[x] - 1) % 3));
  }
  return c;
}

EdgeColouring colour_tree(const Graph& g, Vertex leaf) {
  if (leaf >= g.vertex_count()) throw PreconditionError("root out of range");
  if (!is_tree(g) || g.vertex_count() < 2) throw PreconditionError("colour_tree needs a nontrivial tree");
  return colour_tree(g, bfs_tree(g, leaf));
}

EdgeColouring colour_cycle(const Graph& g) {
  if (!is_cycle(g)) throw PreconditionError("colour_cycle needs a cycle");
  EdgeColouring c(g.edge_count());
  EdgeId e = 0;
  Vertex at = g.edge(0).v;
  for (std::size_t step = 0; step < g.edge_count(); ++step) {
    c.assign(e, static_cast<Colour>(step % 2));
    const auto inc = g.incident(at);
    const EdgeId next = inc[0].edge == e ? inc[1].edge : inc[0].edge;
    at = g.edge(next).other(at);
    e = next;
  }
  return c;
}

namespace {

Vertex star_centre(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == g.max_degree()) return v;
  }
  return 0;
}

std::vector<EdgeId> star_edges(const Graph& g, Vertex v) {
  std::vector<EdgeId> edges;
  for (const auto& inc : g.incident(v)) edges.push_back(inc.edge);
  std::sort(edges.begin(), edges.end());
  return edges;
}

void require_complete_bipartite(const Graph& g) {
  if (!is_complete_bipartite(g)) throw PreconditionError("graph is not complete bipartite");
}

}  // namespace

EdgeColouring colour_complete_bipartite_partial(const Graph& g) {
  require_complete_bipartite(g);
  EdgeColouring c(g.edge_count());
  const auto star = star_edges(g, star_centre(g));
  for (std::size_t i = 0; i < star.size(); ++i) c.assign(star[i], i == 0 ? 0 : 1);
  return c;
}

EdgeColouring colour_complete_bipartite_full(const Graph& g) {
  require_complete_bipartite(g);
  const auto sides = is_bipartite(g);
  const auto& p0 = sides->parts[0];
  const auto& p1 = sides->parts[1];
  const std::size_t smaller = std::min(p0.size(), p1.size());

  if (smaller == 2) {
    // Both sides of size 2 (C_4) pick the side holding the smallest vertex.
    const auto& two = (p0.size() == 2) ? p0 : p1;
    EdgeColouring c(g.edge_count());
    for (const auto& inc : g.incident(two[0])) c.assign(inc.edge, 1);
    for (const auto& inc : g.incident(two[1])) c.assign(inc.edge, 0);
    return c;
  }
  EdgeColouring c = colour_complete_bipartite_partial(g);
  if (smaller >= 3) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!c[e]) c.assign(e, 2);
    }
  }
  return c;
}

}  // namespace cfedge
