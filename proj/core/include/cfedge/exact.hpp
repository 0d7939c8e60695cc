#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cfedge/colouring.hpp"
#include "cfedge/graph.hpp"

namespace cfedge {

enum class SearchMode { full, subgraph };

// A configured size limit was exceeded.
class CeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactConfig {
  std::size_t full_edge_ceiling = 16;
  std::size_t subgraph_edge_ceiling = 14;

  // Defaults, with CFEDGE_CEILING_EDGES (if set to a positive integer)
  // replacing both edge ceilings.
  static ExactConfig from_environment();
};

struct ExactResult {
  std::size_t value = 0;
  EdgeColouring witness;
  std::uint64_t nodes_explored = 0;
};

// Decides whether some colouring with at most `colours` colours satisfies
// every edge. In subgraph mode an edge may also be left unassigned.
//
// Edges are decided in order of descending |E[e]| then id. A colour is
// only tried on an edge if it is at most one above the largest colour used
// so far, which removes colour permutations. As soon as every edge of some
// E[f] is decided, f is checked and the branch is cut if f is unsatisfied.
std::optional<EdgeColouring> cf_feasible(const Graph& g, std::size_t colours, SearchMode mode,
                                         std::uint64_t* nodes_explored = nullptr);

// Smallest feasible colour count, trying 1, 2, ... . Throws CeilingError
// above the configured edge ceiling and ColouringError on isolated vertices.
ExactResult min_cf_colours(const Graph& g, const ExactConfig& config = {});
ExactResult min_scf_colours(const Graph& g, const ExactConfig& config = {});
ExactResult min_colours(const Graph& g, SearchMode mode, const ExactConfig& config = {});

std::string to_string(SearchMode mode);

}  // namespace cfedge
