#include "cfedge/classify.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cfedge {

namespace {

constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();

std::vector<Vertex> odd_cycle_through(Vertex x, Vertex y, const std::vector<Vertex>& parent,
                                      const std::vector<std::size_t>& depth) {
  std::vector<Vertex> left{x};
  std::vector<Vertex> right{y};
  Vertex a = x;
  Vertex b = y;
  while (depth[a] > depth[b]) left.push_back(a = parent[a]);
  while (depth[b] > depth[a]) right.push_back(b = parent[b]);
  while (a != b) {
    left.push_back(a = parent[a]);
    right.push_back(b = parent[b]);
  }
  right.pop_back();  // lca already in left
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const Graph& g, OddCycle* witness) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t kUnset = 2;
  Bipartition result;
  result.side.assign(n, kUnset);
  std::vector<Vertex> parent(n, kNoParent);
  std::vector<std::size_t> depth(n, 0);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (result.side[s] != kUnset) continue;
    result.side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        const Vertex y = inc.neighbour;
        if (result.side[y] == kUnset) {
          result.side[y] = static_cast<std::uint8_t>(1 - result.side[x]);
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (result.side[y] == result.side[x]) {
          if (witness) witness->cycle = odd_cycle_through(x, y, parent, depth);
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) result.parts[result.side[v]].push_back(v);
  return result;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 2 && g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 3 && g.edge_count() == n && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
}

bool is_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 1 && g.edge_count() == n - 1 && is_connected(g);
}

bool is_complete_bipartite(const Graph& g) {
  const auto sides = is_bipartite(g);
  if (!sides || !is_connected(g)) return false;
  const std::size_t a = sides->parts[0].size();
  const std::size_t b = sides->parts[1].size();
  return a >= 1 && b >= 1 && g.edge_count() == a * b;
}

GraphClass classify(const Graph& g) {
  GraphClass cls;
  cls.sides = is_bipartite(g);
  if (is_complete(g)) {
    cls.tag = ClassTag::complete;
  } else if (is_cycle(g)) {
    cls.tag = ClassTag::cycle;
  } else if (is_complete_bipartite(g)) {
    cls.tag = ClassTag::complete_bipartite;
  } else if (is_tree(g)) {
    cls.tag = ClassTag::tree;
  } else if (cls.sides) {
    cls.tag = ClassTag::bipartite;
  } else {
    cls.tag = ClassTag::general;
  }
  if (cls.sides) {
    cls.side_a = std::min(cls.sides->parts[0].size(), cls.sides->parts[1].size());
    cls.side_b = std::max(cls.sides->parts[0].size(), cls.sides->parts[1].size());
  }
  return cls;
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::complete: return "complete";
    case ClassTag::cycle: return "cycle";
    case ClassTag::complete_bipartite: return "complete_bipartite";
    case ClassTag::tree: return "tree";
    case ClassTag::bipartite: return "bipartite";
    case ClassTag::general: return "general";
  }
  return "general";
}

}  // namespace cfedge
