#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cfedge/graph.hpp"

namespace cfedge {

enum class GraphFormat { graph6, edgelist };

// Malformed textual input. offset() is the 0-based byte offset of the
// first offending byte.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6 (McKay): N(n) followed by the upper triangle of the adjacency
// matrix in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte
// plus 63, zero padded. An optional ">>graph6<<" prefix and a single
// trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// "n m" then m lines "u v" (0-based); edge ids follow line order.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

GraphFormat parse_format_name(std::string_view name);

}  // namespace cfedge
