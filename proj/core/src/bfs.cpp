#include "cfedge/bfs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace cfedge {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

bool BfsTree::is_tree_edge(EdgeId e) const {
  return std::any_of(parent.begin(), parent.end(),
                     [e](const std::optional<TreeLink>& p) { return p && p->edge == e; });
}

std::vector<EdgeId> BfsTree::tree_edges() const {
  std::vector<EdgeId> out;
  for (Vertex v : visit_order) {
    if (parent[v]) out.push_back(parent[v]->edge);
  }
  return out;
}

std::vector<std::vector<Vertex>> BfsTree::children() const {
  std::vector<std::vector<Vertex>> out(parent.size());
  for (Vertex v : visit_order) {
    if (parent[v]) out[parent[v]->parent].push_back(v);
  }
  return out;
}

BfsTree bfs_tree(const Graph& g, Vertex root) {
  if (root >= g.vertex_count()) {
    throw GraphError("BFS root " + std::to_string(root) + " out of range");
  }
  const std::size_t n = g.vertex_count();
  BfsTree t;
  t.root = root;
  t.parent.assign(n, std::nullopt);
  t.discovery_index.assign(n, kUnreached);
  t.level.assign(n, kUnreached);
  t.visit_order.reserve(n);

  std::deque<Vertex> queue{root};
  t.discovery_index[root] = 0;
  t.level[root] = 0;
  t.visit_order.push_back(root);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      const Vertex y = inc.neighbour;
      if (t.level[y] != kUnreached) continue;
      t.level[y] = t.level[x] + 1;
      t.parent[y] = TreeLink{x, inc.edge};
      t.discovery_index[y] = t.visit_order.size();
      t.visit_order.push_back(y);
      queue.push_back(y);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (t.level[v] == kUnreached) {
      throw GraphError("graph is disconnected: vertex " + std::to_string(v) + " unreachable from " +
                       std::to_string(root));
    }
  }
  for (Vertex v : t.visit_order) {
    if (t.levels.size() <= t.level[v]) t.levels.resize(t.level[v] + 1);
    t.levels[t.level[v]].push_back(v);
  }
  return t;
}

}  // namespace cfedge
