#include "cfedge/enumerate.hpp"

#include <map>
#include <string>

#include "cfedge/canonical.hpp"
#include "cfedge/classify.hpp"
#include "cfedge/exact.hpp"

namespace cfedge {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;
using Layer = std::map<std::string, Graph>;  // canonical graph6 -> representative

Pairs pairs_of(const Graph& g) {
  Pairs out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

void insert_canonical(Layer& layer, const Graph& g) {
  auto canon = canonical_labelling(g);
  layer.try_emplace(std::move(canon.graph6), std::move(canon.graph));
}

std::vector<Graph> values(Layer& layer) {
  std::vector<Graph> out;
  out.reserve(layer.size());
  for (auto& [key, g] : layer) out.push_back(std::move(g));
  return out;
}

void check_ceiling(std::size_t requested, std::size_t limit, const char* what) {
  if (requested > limit) {
    throw CeilingError(std::string(what) + " enumeration limited to " + std::to_string(limit) + ", requested " +
                       std::to_string(requested));
  }
}

}  // namespace

std::vector<Graph> enumerate_trees(std::size_t n, const EnumerationLimits& limits) {
  check_ceiling(n, limits.max_tree_order, "tree");
  if (n == 0) return {};
  Layer layer;
  insert_canonical(layer, Graph::from_edges(1, {}));
  for (std::size_t order = 1; order < n; ++order) {
    Layer next;
    for (const auto& [key, t] : layer) {
      for (Vertex v = 0; v < order; ++v) {
        Pairs pairs = pairs_of(t);
        pairs.emplace_back(v, static_cast<Vertex>(order));
        insert_canonical(next, Graph::from_edges(order + 1, pairs));
      }
    }
    layer = std::move(next);
  }
  return values(layer);
}

std::vector<Graph> enumerate_connected_bipartite(std::size_t max_n, const EnumerationLimits& limits) {
  check_ceiling(max_n, limits.max_bipartite_order, "bipartite");
  std::vector<Graph> out;
  if (max_n < 2) return out;
  Layer layer;
  insert_canonical(layer, Graph::from_edges(2, {{0, 1}}));
  for (std::size_t order = 2;; ++order) {
    for (const auto& [key, g] : layer) out.push_back(g);
    if (order == max_n) break;
    Layer next;
    for (const auto& [key, g] : layer) {
      const auto sides = is_bipartite(g);
      for (const auto& part : sides->parts) {
        const std::size_t k = part.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
          Pairs pairs = pairs_of(g);
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1U) pairs.emplace_back(part[i], static_cast<Vertex>(order));
          }
          insert_canonical(next, Graph::from_edges(order + 1, pairs));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t max_edges, const EnumerationLimits& limits) {
  check_ceiling(max_edges, limits.max_connected_edges, "connected graph");
  std::vector<Graph> out;
  if (max_edges == 0) return out;
  Layer layer;
  insert_canonical(layer, Graph::from_edges(2, {{0, 1}}));
  for (std::size_t m = 1;; ++m) {
    for (const auto& [key, g] : layer) out.push_back(g);
    if (m == max_edges) break;
    Layer next;
    for (const auto& [key, g] : layer) {
      const auto n = static_cast<Vertex>(g.vertex_count());
      for (Vertex a = 0; a < n; ++a) {
        Pairs pendant = pairs_of(g);
        pendant.emplace_back(a, n);
        insert_canonical(next, Graph::from_edges(n + 1, pendant));
        for (Vertex b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          Pairs chord = pairs_of(g);
          chord.emplace_back(a, b);
          insert_canonical(next, Graph::from_edges(n, chord));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace cfedge
