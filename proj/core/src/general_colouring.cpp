#include <algorithm>
#include <set>
#include <stdexcept>

#include "cfedge/classify.hpp"
#include "cfedge/constructors.hpp"

namespace cfedge {

namespace {

void copy_shifted(const Subgraph& sub, const EdgeColouring& local, Colour offset, EdgeColouring& host) {
  for (EdgeId e = 0; e < local.size(); ++e) {
    if (local[e]) host.assign(sub.edge_to_host[e], *local[e] + offset);
  }
}

// `h` is a subgraph of the top-level graph, edges mapped by `edge_to_top`;
// `classes` is a proper colouring of h into [0, 2^levels).
void colour_layers(const Graph& h, const std::vector<EdgeId>& edge_to_top, const std::vector<std::uint32_t>& classes,
                   unsigned levels, EdgeColouring& out, GeneralColouringTrace* trace) {
  if (levels == 0) return;  // one class left, so no edges
  const std::uint32_t half = std::uint32_t{1} << (levels - 1);
  std::vector<EdgeId> cross;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& uv = h.edge(e);
    ((classes[uv.u] < half) != (classes[uv.v] < half) ? cross : rest).push_back(e);
  }
  if (trace) trace->layer_edges.push_back(cross.size());

  if (!cross.empty()) {
    Subgraph layer = edge_subgraph(h, cross);
    for (auto& e : layer.edge_to_host) e = edge_to_top[e];
    copy_shifted(layer, colour_bipartite(layer.graph), 3 * (levels - 1), out);
  }
  if (rest.empty()) {
    if (trace) trace->layer_edges.resize(trace->layer_edges.size() + levels - 1, 0);
    return;
  }
  // F keeps its own isolated vertices out, and class i + half merges into i.
  const Subgraph merged = edge_subgraph(h, rest);
  std::vector<std::uint32_t> merged_classes(merged.graph.vertex_count());
  for (Vertex v = 0; v < merged_classes.size(); ++v) merged_classes[v] = classes[merged.vertex_to_host[v]] % half;
  std::vector<EdgeId> merged_to_top(merged.edge_to_host.size());
  for (EdgeId e = 0; e < merged_to_top.size(); ++e) merged_to_top[e] = edge_to_top[merged.edge_to_host[e]];
  colour_layers(merged.graph, merged_to_top, merged_classes, levels - 1, out, trace);
}

void colour_complete_range(const Graph& g, Vertex lo, Vertex hi, unsigned depth, EdgeColouring& out) {
  if (hi - lo < 2) return;
  const Vertex mid = lo + (hi - lo + 1) / 2;
  std::vector<EdgeId> cross;
  for (Vertex a = lo; a < mid; ++a) {
    for (Vertex b = mid; b < hi; ++b) cross.push_back(*g.find_edge(a, b));
  }
  const Subgraph layer = edge_subgraph(g, cross);
  copy_shifted(layer, colour_complete_bipartite_partial(layer.graph), 2 * depth, out);
  colour_complete_range(g, lo, mid, depth + 1, out);
  colour_complete_range(g, mid, hi, depth + 1, out);
}

}  // namespace

EdgeColouring colour_general(const Graph& g, const ProperVertexColouring& pvc, GeneralColouringTrace* trace) {
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");
  if (!is_proper(g, pvc)) throw PreconditionError("vertex colouring is not a proper colouring of this graph");
  EdgeColouring out(g.edge_count());
  std::vector<EdgeId> identity(g.edge_count());
  for (EdgeId e = 0; e < identity.size(); ++e) identity[e] = e;
  if (trace) trace->layer_edges.clear();
  colour_layers(g, identity, pvc.classes, ceil_log2(pvc.k), out, trace);
  return out;
}

EdgeColouring colour_complete(const Graph& g) {
  if (!is_complete(g)) throw PreconditionError("colour_complete needs a complete graph on >= 2 vertices");
  EdgeColouring out(g.edge_count());
  colour_complete_range(g, 0, static_cast<Vertex>(g.vertex_count()), 0, out);
  return out;
}

BoundReport make_bound_report(const Graph& g, std::size_t k, const EdgeColouring& c, std::string construction) {
  BoundReport r;
  r.delta_max = g.max_degree();
  r.delta_min = g.min_degree();
  r.class_count = k;
  r.bound_scf = 3 * ceil_log2(k);
  r.bound_cf = r.bound_scf + 1;
  r.bound_delta = 3 * ceil_log2(r.delta_max) + 1;
  r.delta_bound_applies = k <= r.delta_max;
  r.colours_used = c.colours_used();
  r.construction = std::move(construction);
  return r;
}

AutoResult colour_auto(const Graph& g, const AutoOptions& options) {
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");
  const PvcStrategy strategy =
      g.vertex_count() <= options.exact_vertex_ceiling ? PvcStrategy::exact : PvcStrategy::dsatur;
  const ProperVertexColouring pvc = proper_vertex_colouring(g, strategy, options.exact_vertex_ceiling);

  EdgeColouring out(g.edge_count());
  std::set<std::string> names;
  for (const Subgraph& comp : connected_components(g)) {
    const Graph& h = comp.graph;
    const GraphClass cls = classify(h);
    EdgeColouring local;
    std::string name;
    switch (cls.tag) {
      case ClassTag::cycle:
        local = colour_cycle(h);
        name = "cycle";
        break;
      case ClassTag::complete:
        local = colour_complete(h);
        name = "complete";
        break;
      case ClassTag::complete_bipartite:
        local = colour_complete_bipartite_full(h);
        name = "complete-bipartite";
        break;
      case ClassTag::tree:
      case ClassTag::bipartite:
        local = colour_bipartite(h);
        name = "bipartite";
        break;
      case ClassTag::general: {
        // Restrict the global classes to the component and renumber densely.
        std::vector<std::uint32_t> dense(pvc.k, UINT32_MAX);
        ProperVertexColouring sub;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
          auto& d = dense[pvc.classes[comp.vertex_to_host[v]]];
          if (d == UINT32_MAX) d = sub.k++;
          sub.classes.push_back(d);
        }
        local = colour_general(h, sub);
        name = "general";
        break;
      }
    }
    if (!local.fully_assigned()) {
      local = complete_with_fresh_colour(h, local);
      name += "+fresh";
    }
    names.insert(name);
    for (EdgeId e = 0; e < local.size(); ++e) out.assign(comp.edge_to_host[e], *local[e]);
  }

  std::string construction;
  for (const auto& n : names) construction += (construction.empty() ? "" : ",") + n;
  AutoResult result{out, make_bound_report(g, pvc.k, out, construction)};
  result.report.strategy = strategy;
  const BoundReport& r = result.report;
  if (g.edge_count() > 0 && r.colours_used > r.bound_cf) {
    throw std::logic_error("colour_auto used " + std::to_string(r.colours_used) + " colours, above the bound " +
                           std::to_string(r.bound_cf));
  }
  if (g.edge_count() > 0 && r.delta_bound_applies && r.colours_used > r.bound_delta) {
    throw std::logic_error("colour_auto used " + std::to_string(r.colours_used) +
                           " colours, above the maximum-degree bound " + std::to_string(r.bound_delta));
  }
  return result;
}

}  // namespace cfedge
