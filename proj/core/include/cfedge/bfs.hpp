#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cfedge/graph.hpp"

namespace cfedge {

struct TreeLink {
  Vertex parent = 0;
  EdgeId edge = 0;
};

// Rooted BFS spanning tree. Neighbours are explored in ascending vertex id,
// so the tree, the visit order and the levels are functions of (graph, root).
struct BfsTree {
  Vertex root = 0;
  std::vector<std::optional<TreeLink>> parent;  // empty at the root
  std::vector<Vertex> visit_order;              // visit_order[k] = k-th discovered vertex
  std::vector<std::size_t> discovery_index;     // inverse of visit_order
  std::vector<std::size_t> level;               // dist(v, root)
  std::vector<std::vector<Vertex>> levels;      // L_0, L_1, ... in discovery order

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  bool is_tree_edge(EdgeId e) const;
  std::vector<EdgeId> tree_edges() const;
  std::vector<std::vector<Vertex>> children() const;
};

// Throws GraphError when the root is invalid or some vertex is unreachable.
BfsTree bfs_tree(const Graph& g, Vertex root);

}  // namespace cfedge
