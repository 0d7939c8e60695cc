#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "cfedge/graph.hpp"

namespace cfedge {

// Seeded source for every random generator.
//
// The engine is std::mt19937_64 seeded with the 64-bit seed, whose output
// sequence is fixed by the C++ standard. Bounded integers use rejection
// sampling on the raw 64-bit output (reject below 2^64 mod n, then reduce),
// and Bernoulli(p) compares the top 53 bits scaled to [0,1) against p. The
// standard distribution classes are avoided because their algorithms are
// implementation-defined, which would break corpus reproducibility.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  double unit();  // [0, 1)
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t n);
// Sides {0..n-1} and {n..n+m-1}; edges ordered by (left, right).
Graph complete_bipartite_graph(std::size_t n, std::size_t m);
// Heap layout: vertex i has children 2i+1 and 2i+2; 2^(h+1)-1 vertices.
Graph complete_binary_tree(std::size_t height);
// Decodes a uniformly drawn Prufer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
// Sides of sizes n and m, each cross pair present with probability p.
// May contain isolated vertices.
Graph random_bipartite(std::size_t n, std::size_t m, double p, std::uint64_t seed);
// Erdos-Renyi G(n, p); pairs visited in (i, j), i < j, lexicographic order.
Graph gnp(std::size_t n, double p, std::uint64_t seed);
Graph petersen_graph();

// Tree from a Prufer sequence over n = seq.size() + 2 vertices.
Graph tree_from_prufer(std::span<const Vertex> seq);

// Parses a colon-delimited generator spec and builds the graph:
//   path:N  cycle:K  complete:N  complete-bipartite:N,M
//   complete-binary-tree:H  random-tree:N[,SEED]
//   random-bipartite:N,M,P[,SEED]  gnp:N,P[,SEED]  petersen
// Random generators fall back to default_seed when SEED is omitted.
// Throws GraphError on unknown names and invalid parameters.
Graph generate(std::string_view spec, std::uint64_t default_seed = 0);

}  // namespace cfedge
