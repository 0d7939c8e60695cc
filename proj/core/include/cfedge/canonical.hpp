#pragma once

#include <string>
#include <vector>

#include "cfedge/graph.hpp"

namespace cfedge {

// Canonical relabelling: isomorphic graphs map to identical labelled graphs.
//
// Trees are labelled in preorder of their centre-rooted AHU ordering. Other
// graphs go through individualization-refinement: colour refinement to an
// equitable ordered partition, then branching on the first smallest
// non-singleton cell, keeping the lexicographically smallest graph6 over all
// leaves. Branches in the orbit of an explored sibling under automorphisms
// found so far (those fixing the branch prefix) are skipped. Meant for
// small graphs.
struct CanonicalLabelling {
  std::vector<Vertex> label;  // label[v] = canonical position of v
  Graph graph;                // g relabelled by `label`, edges in graph6 order
  std::string graph6;         // emit_graph6(graph)
};

CanonicalLabelling canonical_labelling(const Graph& g);
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cfedge
