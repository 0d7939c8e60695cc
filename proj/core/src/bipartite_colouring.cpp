#include <cassert>
#include <deque>
#include <limits>

#include "cfedge/classify.hpp"
#include "cfedge/constructors.hpp"

namespace cfedge {

namespace {

struct Split {
  BfsTree tree;
  std::optional<Vertex> s;
  std::vector<char> in_s_half;  // vertex lies in T_s
};

Vertex min_degree_root(const Graph& h) {
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == h.min_degree()) return v;
  }
  return 0;
}

Split split_component(const Graph& h) {
  Split sp{bfs_tree(h, min_degree_root(h)), std::nullopt, std::vector<char>(h.vertex_count(), 0)};
  const Vertex r = sp.tree.root;
  if (h.degree(r) == 1) return sp;
  Vertex s = h.incident(r)[0].neighbour;
  for (const auto& inc : h.incident(r)) {
    if (sp.tree.discovery_index[inc.neighbour] > sp.tree.discovery_index[s]) s = inc.neighbour;
  }
  sp.s = s;
  // Parents precede children in visit order.
  for (Vertex x : sp.tree.visit_order) {
    if (x == s) {
      sp.in_s_half[x] = 1;
    } else if (const auto& link = sp.tree.parent[x]; link && sp.in_s_half[link->parent]) {
      sp.in_s_half[x] = 1;
    }
  }
  return sp;
}

EdgeColouring colour_split(const Graph& h, const Split& sp) {
  EdgeColouring c(h.edge_count());
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    const auto& link = sp.tree.parent[x];
    if (!link) continue;
    const std::size_t lvl = sp.tree.level[x];
    Colour colour = 0;
    if (!sp.s || sp.in_s_half[x]) {
      // Tree rooted at r (whole tree, or T_s + rs): level in that tree is lvl.
      colour = static_cast<Colour>((lvl - 1) % 3);
    } else {
      // T_r + rs rooted at s puts x one level deeper.
      colour = static_cast<Colour>(lvl % 3);
    }
    c.assign(link->edge, colour);
  }
  return c;
}

// Levels in the tree formed by the given tree edges plus rs, from `from`.
std::vector<std::size_t> half_tree_levels(const Graph& h, const Split& sp, bool s_half, Vertex from) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  const Vertex r = sp.tree.root;
  const Vertex s = *sp.s;
  std::vector<std::vector<Vertex>> adj(h.vertex_count());
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    const auto& link = sp.tree.parent[x];
    if (!link || x == s) continue;
    if (static_cast<bool>(sp.in_s_half[x]) == s_half) {
      adj[x].push_back(link->parent);
      adj[link->parent].push_back(x);
    }
  }
  adj[r].push_back(s);
  adj[s].push_back(r);
  std::vector<std::size_t> level(h.vertex_count(), kUnset);
  std::deque<Vertex> queue{from};
  level[from] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : adj[x]) {
      if (level[y] == kUnset) {
        level[y] = level[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return level;
}

BipartiteSplitAudit audit_split(const Graph& h, const Split& sp) {
  BipartiteSplitAudit audit;
  audit.root = sp.tree.root;
  audit.last_neighbour = sp.s;
  if (!sp.s) return audit;
  const Vertex r = sp.tree.root;
  const Vertex s = *sp.s;
  const auto& level = sp.tree.level;

  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& uv = h.edge(e);
    if (sp.in_s_half[uv.u] == sp.in_s_half[uv.v]) continue;
    if ((uv.u == r && uv.v == s) || (uv.u == s && uv.v == r)) continue;
    ++audit.cross_edges;
    const Vertex in_r = sp.in_s_half[uv.u] ? uv.v : uv.u;
    const Vertex in_s = sp.in_s_half[uv.u] ? uv.u : uv.v;
    if (level[in_r] != level[in_s] + 1) ++audit.cross_edge_violations;
  }

  // T_s + rs rooted at r keeps levels; T_r + rs rooted at s shifts them by one.
  const auto s_levels = half_tree_levels(h, sp, true, r);
  const auto r_levels = half_tree_levels(h, sp, false, s);
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    const bool ok = sp.in_s_half[x] ? s_levels[x] == level[x] : r_levels[x] == level[x] + 1;
    if (!ok) ++audit.level_violations;
  }
  return audit;
}

void require_bipartite_without_isolated(const Graph& g) {
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");
  OddCycle odd;
  if (!is_bipartite(g, &odd)) {
    throw PreconditionError("graph is not bipartite (odd cycle of length " + std::to_string(odd.cycle.size()) + ")");
  }
}

}  // namespace

EdgeColouring colour_bipartite(const Graph& g) {
  require_bipartite_without_isolated(g);
  EdgeColouring out(g.edge_count());
  for (const Subgraph& comp : connected_components(g)) {
    const Split sp = split_component(comp.graph);
#ifndef NDEBUG
    const auto audit = audit_split(comp.graph, sp);
    assert(audit.cross_edge_violations == 0);
    assert(audit.level_violations == 0);
#endif
    const EdgeColouring local = colour_split(comp.graph, sp);
    for (EdgeId e = 0; e < local.size(); ++e) {
      if (local[e]) out.assign(comp.edge_to_host[e], *local[e]);
    }
  }
  return out;
}

BipartiteSplitAudit audit_bipartite_split(const Graph& g) {
  require_bipartite_without_isolated(g);
  if (!is_connected(g)) throw PreconditionError("audit needs a connected graph");
  return audit_split(g, split_component(g));
}

}  // namespace cfedge
