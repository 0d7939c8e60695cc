#pragma once

#include <cstddef>
#include <vector>

#include "cfedge/graph.hpp"

namespace cfedge {

struct EnumerationLimits {
  std::size_t max_tree_order = 14;
  std::size_t max_bipartite_order = 8;
  std::size_t max_connected_edges = 8;
};

// One canonical representative per isomorphism class, sorted by canonical
// graph6. Built by growth plus canonical deduplication: every tree on n
// vertices is a tree on n-1 vertices with a leaf attached.
std::vector<Graph> enumerate_trees(std::size_t n, const EnumerationLimits& limits = {});

// Every connected bipartite graph with 2..max_n vertices, ordered by order
// then canonical graph6. Grown by attaching a new vertex to a nonempty
// subset of one side; removing a non-cut vertex inverts this.
std::vector<Graph> enumerate_connected_bipartite(std::size_t max_n, const EnumerationLimits& limits = {});

// Every connected graph with 1..max_edges edges, ordered by edge count then
// canonical graph6. Grown by adding a chord or a pendant edge.
std::vector<Graph> enumerate_connected_graphs(std::size_t max_edges, const EnumerationLimits& limits = {});

}  // namespace cfedge
