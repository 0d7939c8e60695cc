#include "cfedge/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cfedge {

std::string describe_pair(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError("vertex count too large: " + std::to_string(n));
  }
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw GraphError("vertex out of range in edge " + describe_pair(a, b) + " for n=" + std::to_string(n));
    }
    if (a == b) {
      throw GraphError("self-loop " + describe_pair(a, b));
    }
    const auto e = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    g.adjacency_[a].push_back({b, e});
    g.adjacency_[b].push_back({a, e});
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& x, const Incidence& y) { return x.neighbour < y.neighbour; });
    const auto dup = std::adjacent_find(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) {
      return x.neighbour == y.neighbour;
    });
    if (dup != list.end()) {
      const Edge& first = g.edges_[std::max(dup->edge, std::next(dup)->edge)];
      throw GraphError("duplicate edge " + describe_pair(first.u, first.v));
    }
  }
  if (n > 0) {
    g.min_degree_ = std::numeric_limits<std::size_t>::max();
    for (const auto& list : g.adjacency_) {
      g.max_degree_ = std::max(g.max_degree_, list.size());
      g.min_degree_ = std::min(g.min_degree_, list.size());
    }
  }
  return g;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& l) { return l.empty(); });
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  const auto& list = adjacency_[a];
  const auto it = std::lower_bound(list.begin(), list.end(), b,
                                   [](const Incidence& x, Vertex key) { return x.neighbour < key; });
  if (it == list.end() || it->neighbour != b) return std::nullopt;
  return it->edge;
}

std::vector<EdgeId> Graph::closed_neighbourhood(EdgeId e) const {
  const Edge& uv = edge(e);
  std::vector<EdgeId> out;
  out.reserve(degree(uv.u) + degree(uv.v) - 1);
  for (const auto& inc : adjacency_[uv.u]) out.push_back(inc.edge);
  for (const auto& inc : adjacency_[uv.v]) {
    if (inc.edge != e) out.push_back(inc.edge);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Edge> x(a.edges_.begin(), a.edges_.end());
  std::vector<Edge> y(b.edges_.begin(), b.edges_.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<char> used(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    used[g.edge(e).u] = 1;
    used[g.edge(e).v] = 1;
  }
  Subgraph sub;
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) {
      local[v] = static_cast<Vertex>(sub.vertex_to_host.size());
      sub.vertex_to_host.push_back(v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (EdgeId e : edges) {
    pairs.emplace_back(local[g.edge(e).u], local[g.edge(e).v]);
    sub.edge_to_host.push_back(e);
  }
  sub.graph = Graph::from_edges(sub.vertex_to_host.size(), pairs);
  return sub;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted.at(i)] = static_cast<Vertex>(i);

  Subgraph sub;
  sub.vertex_to_host = sorted;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& uv = g.edge(e);
    if (local[uv.u] != kAbsent && local[uv.v] != kAbsent) {
      pairs.emplace_back(local[uv.u], local[uv.v]);
      sub.edge_to_host.push_back(e);
    }
  }
  sub.graph = Graph::from_edges(sorted.size(), pairs);
  return sub;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.vertex_count(), kUnset);
  std::uint32_t next = 0;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        if (label[inc.neighbour] == kUnset) {
          label[inc.neighbour] = next;
          queue.push_back(inc.neighbour);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<Subgraph> connected_components(const Graph& g) {
  const auto label = component_labels(g);
  std::uint32_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) members[label[v]].push_back(v);
  std::vector<Subgraph> out;
  out.reserve(count);
  for (const auto& m : members) out.push_back(induced_subgraph(g, m));
  return out;
}

bool is_connected(const Graph& g) {
  const auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](auto l) { return l == 0; });
}

Graph permute_vertices(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("permutation size mismatch");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edges(g.vertex_count(), pairs);
}

}  // namespace cfedge
