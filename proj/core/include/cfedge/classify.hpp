#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfedge/graph.hpp"

namespace cfedge {

struct Bipartition {
  // side[v] in {0, 1}; per component the side of its smallest vertex is 0.
  std::vector<std::uint8_t> side;
  std::array<std::vector<Vertex>, 2> parts;
};

struct OddCycle {
  std::vector<Vertex> cycle;  // closed walk of odd length, first vertex not repeated
};

// Two-colouring by BFS parity per component, or an odd cycle witness.
std::optional<Bipartition> is_bipartite(const Graph& g, OddCycle* witness = nullptr);

enum class ClassTag { complete, cycle, complete_bipartite, tree, bipartite, general };

struct GraphClass {
  ClassTag tag = ClassTag::general;
  std::optional<Bipartition> sides;  // present whenever the graph is bipartite
  std::size_t side_a = 0;            // K_{a,b} sizes for complete_bipartite, a <= b
  std::size_t side_b = 0;
};

// Checked in the order complete, cycle, complete bipartite, tree, bipartite.
// Expects a connected graph without isolated vertices.
GraphClass classify(const Graph& g);

bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);
bool is_tree(const Graph& g);
// K_{a,b} with a, b >= 1 exactly.
bool is_complete_bipartite(const Graph& g);

std::string to_string(ClassTag tag);

}  // namespace cfedge
