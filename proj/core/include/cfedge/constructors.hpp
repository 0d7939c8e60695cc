#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfedge/bfs.hpp"
#include "cfedge/colouring.hpp"
#include "cfedge/graph.hpp"

namespace cfedge {

// Precondition of a constructor does not hold for the given graph.
class PreconditionError : public GraphError {
 public:
  using GraphError::GraphError;
};

// ceil(log2(k)) for k >= 1; 0 for k <= 1.
unsigned ceil_log2(std::size_t k);

// --- trees ---------------------------------------------------------------

// Edge between levels L_i and L_{i+1} gets colour i mod 3. Requires a
// nontrivial tree and a BFS tree of it rooted at a leaf.
EdgeColouring colour_tree(const Graph& g, const BfsTree& t);
// Roots the BFS tree at the given leaf.
EdgeColouring colour_tree(const Graph& g, Vertex leaf);

// --- cycles and complete bipartite graphs --------------------------------

// Alternates 0,1,... along the cycle starting at edge 0, giving one
// adjacent 0,0 pair when the length is odd.
EdgeColouring colour_cycle(const Graph& g);

// Colours only the star of one maximum-degree vertex v (smallest id among
// them): its lowest edge id gets 0, the rest 1. Every edge of K_{n,m}
// meets that star.
EdgeColouring colour_complete_bipartite_partial(const Graph& g);

// Full conflict-free colouring of K_{n,m}:
//   min >= 3: star of v as above, every other edge colour 2;
//   min == 2: edges at the smaller-id vertex u1 of the 2-side get 1, edges at u2 get 0;
//   min == 1: the star itself, 0 then 1s.
EdgeColouring colour_complete_bipartite_full(const Graph& g);

// --- bipartite graphs ------------------------------------------------------

// Colours a spanning forest with colours {0,1,2} such that every edge of g
// is satisfied. Per component the root r has minimum degree (smallest id);
// if r is a leaf the BFS tree is coloured level by level, otherwise the BFS
// tree is cut at rs, with s the last-discovered neighbour of r, and the two
// halves are coloured as trees rooted at s and at r respectively.
EdgeColouring colour_bipartite(const Graph& g);

// Audit of the split used by colour_bipartite on one connected component.
struct BipartiteSplitAudit {
  Vertex root = 0;
  std::optional<Vertex> last_neighbour;  // s; empty when the root is a leaf
  std::size_t cross_edges = 0;           // edges between the halves other than rs
  std::size_t cross_edge_violations = 0;  // cross edge whose r-side end is not on the deeper level
  std::size_t level_violations = 0;       // vertex whose level in its half's tree breaks the offset rule
};

// Replays the split for a connected bipartite graph without isolated
// vertices and checks its two structural claims on every vertex and edge.
BipartiteSplitAudit audit_bipartite_split(const Graph& g);

// --- general graphs --------------------------------------------------------

struct ProperVertexColouring {
  std::vector<std::uint32_t> classes;  // per vertex, 0..k-1
  std::uint32_t k = 0;                 // number of nonempty classes
};

enum class PvcStrategy { exact, dsatur };

inline constexpr std::size_t kDefaultExactVertexCeiling = 20;

// exact: chi(G) classes by DSATUR branch and bound; refuses graphs above
// the vertex ceiling. dsatur: greedy saturation-order colouring, k is the
// number of classes used, an upper bound on chi(G).
ProperVertexColouring proper_vertex_colouring(const Graph& g, PvcStrategy strategy,
                                              std::size_t exact_vertex_ceiling = kDefaultExactVertexCeiling);

bool is_proper(const Graph& g, const ProperVertexColouring& pvc);

struct GeneralColouringTrace {
  // Edge count of the bipartite layer at each of the ceil(log2 k) recursion
  // levels, top level first; 0 where the layer was empty.
  std::vector<std::size_t> layer_edges;
  // Levels that actually coloured a layer.
  std::size_t depth() const {
    return static_cast<std::size_t>(std::count_if(layer_edges.begin(), layer_edges.end(), [](auto x) { return x > 0; }));
  }
};

// Halving recursion over the vertex classes: with 2^t >= k padded classes,
// the edges between the lower and upper halves of the classes form a
// bipartite layer coloured by colour_bipartite with the block
// {3(t-1), 3(t-1)+1, 3(t-1)+2}; the remaining edges, with class i merged
// into class i + 2^(t-1), are handled recursively. At most 3*ceil(log2 k)
// colours.
EdgeColouring colour_general(const Graph& g, const ProperVertexColouring& pvc,
                             GeneralColouringTrace* trace = nullptr);

// Complete graphs: halve the vertices by id (ceil, floor), colour the cross
// K_{a,b} with colour_complete_bipartite_partial using the block
// {2d, 2d+1} at depth d, recurse into both halves. At most 2*ceil(log2 n)
// colours.
EdgeColouring colour_complete(const Graph& g);

// --- dispatch --------------------------------------------------------------

struct BoundReport {
  std::size_t delta_max = 0;
  std::size_t delta_min = 0;
  std::size_t class_count = 0;  // k of the proper vertex colouring used
  std::size_t bound_scf = 0;    // 3 ceil(log2 k)
  std::size_t bound_cf = 0;     // 3 ceil(log2 k) + 1
  std::size_t bound_delta = 0;  // 3 ceil(log2 Delta) + 1
  bool delta_bound_applies = false;  // k <= Delta was achieved
  std::size_t colours_used = 0;
  std::string construction;
  PvcStrategy strategy = PvcStrategy::exact;
};

struct AutoOptions {
  std::size_t exact_vertex_ceiling = kDefaultExactVertexCeiling;
};

struct AutoResult {
  EdgeColouring colouring;
  BoundReport report;
};

// Colours every component by its class (cycle, complete, complete
// bipartite, bipartite, general), then completes with one fresh colour.
// The result is a full conflict-free colouring. Throws std::logic_error if
// a bound it is meant to meet is exceeded.
AutoResult colour_auto(const Graph& g, const AutoOptions& options = {});

// Report fields derived from g and a proper colouring with k classes.
BoundReport make_bound_report(const Graph& g, std::size_t k, const EdgeColouring& c, std::string construction);

std::string to_string(PvcStrategy s);

}  // namespace cfedge
