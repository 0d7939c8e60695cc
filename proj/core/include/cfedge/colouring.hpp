#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfedge/graph.hpp"

namespace cfedge {

using Colour = std::uint32_t;

// Partial edge colouring, indexed by edge id of a host graph. Unassigned
// edges are first-class, so the same value models a colouring of the whole
// graph and a colouring of one of its subgraphs.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(std::size_t edge_count) : assignment_(edge_count) {}
  explicit EdgeColouring(std::vector<std::optional<Colour>> assignment) : assignment_(std::move(assignment)) {}
  static EdgeColouring full(std::initializer_list<Colour> colours);

  std::size_t size() const { return assignment_.size(); }
  const std::optional<Colour>& operator[](EdgeId e) const { return assignment_.at(e); }
  void assign(EdgeId e, Colour c) { assignment_.at(e) = c; }
  void clear(EdgeId e) { assignment_.at(e).reset(); }

  std::size_t assigned_count() const;
  bool fully_assigned() const { return assigned_count() == size(); }
  // Number of distinct colours among assigned edges.
  std::size_t colours_used() const;
  std::optional<Colour> max_colour() const;
  const std::vector<std::optional<Colour>>& assignment() const { return assignment_; }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<std::optional<Colour>> assignment_;
};

// Multiset of colours, written c1^m1 c2^m2 ... with ascending colours and
// the exponent omitted when it is 1.
class Palette {
 public:
  void add(Colour c) { ++counts_[c]; }
  std::size_t count(Colour c) const;
  std::size_t total() const;
  bool empty() const { return counts_.empty(); }
  // Some colour occurs exactly once.
  bool has_unique() const;
  const std::map<Colour, std::size_t>& counts() const { return counts_; }
  std::string to_string() const;

  friend bool operator==(const Palette&, const Palette&) = default;

 private:
  std::map<Colour, std::size_t> counts_;
};

// Colours of the assigned edges in E[uv]; e itself is counted once.
Palette edge_palette(const Graph& g, const EdgeColouring& c, EdgeId e);
// Colours of the assigned edges at v.
Palette vertex_palette(const Graph& g, const EdgeColouring& c, Vertex v);

bool is_edge_satisfied(const Graph& g, const EdgeColouring& c, EdgeId e);
bool is_vertex_satisfied(const Graph& g, const EdgeColouring& c, Vertex v);

struct UnsatisfiedEdge {
  EdgeId edge = 0;
  Palette palette;
};

struct VerificationReport {
  bool satisfied = false;
  std::vector<UnsatisfiedEdge> unsatisfied_edges;
  std::size_t colours_used = 0;
};

class ColouringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checks every edge of g, assigned or not, against the palette of the
// assigned edges around it. Throws ColouringError if g has an isolated
// vertex or c does not match g's edge count.
VerificationReport verify(const Graph& g, const EdgeColouring& c);

// Gives every unassigned edge the colour max_colour + 1. Requires a
// satisfying colouring of a graph without isolated edges.
EdgeColouring complete_with_fresh_colour(const Graph& g, const EdgeColouring& c);

// Relabels colours to 0..k-1 by first occurrence in edge-id order.
EdgeColouring normalize_colours(const EdgeColouring& c);

// Header "m k", then one line "edge_id colour" or "edge_id -" per edge.
// The reader skips lines starting with '#'.
std::string write_colouring(const EdgeColouring& c);
EdgeColouring read_colouring(std::string_view text);

}  // namespace cfedge
