#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfedge {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;  // always u < v
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbour = 0;
  EdgeId edge = 0;
};

// Thrown for malformed graph input: loops, duplicates, out-of-range ids,
// and violated structural preconditions (disconnected, wrong class, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph.
//
// Edge ids are dense 0..m-1 in insertion order and never change. Adjacency
// lists are sorted by neighbour id, so every traversal that walks them is
// deterministic.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError naming the offending pair on a loop, a duplicate, or
  // an endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const { return max_degree_; }
  // 0 for the empty graph, and whenever an isolated vertex is present.
  std::size_t min_degree() const { return min_degree_; }
  bool has_isolated_vertex() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  // E[uv]: every edge incident to u or v, including uv itself, ascending ids.
  std::vector<EdgeId> closed_neighbourhood(EdgeId e) const;

  // Labelled equality: same order and same edge set, ignoring edge ids.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph::from_edges(n, pairs);
}

// A graph carved out of a host, with maps back to host ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertex_to_host;
  std::vector<EdgeId> edge_to_host;
};

// Subgraph spanned by the given host edges; vertices touched by none of them
// are dropped. Local ids follow ascending host ids.
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

// Subgraph induced by the given vertices (ascending host order).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Per-vertex component index, components numbered by smallest vertex.
std::vector<std::uint32_t> component_labels(const Graph& g);

// Connected components as induced subgraphs, ordered by smallest vertex.
std::vector<Subgraph> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Copy of g with relabelled vertices: vertex v becomes perm[v]. Edge ids
// are preserved.
Graph permute_vertices(const Graph& g, std::span<const Vertex> perm);

std::string describe_pair(Vertex a, Vertex b);

}  // namespace cfedge
