#include <algorithm>
#include <limits>

#include "cfedge/constructors.hpp"

namespace cfedge {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Saturation bookkeeping shared by the greedy pass and the branch and bound.
class Saturation {
 public:
  explicit Saturation(const Graph& g) : g_(g), colour_(g.vertex_count(), kNone), seen_(g.vertex_count()) {
    for (auto& row : seen_) row.assign(g.vertex_count() + 1, 0);
  }

  std::uint32_t colour(Vertex v) const { return colour_[v]; }
  std::size_t saturation(Vertex v) const { return distinct_[v]; }
  bool allowed(Vertex v, std::uint32_t c) const { return seen_[v][c] == 0; }

  void set(Vertex v, std::uint32_t c) {
    colour_[v] = c;
    for (const auto& inc : g_.incident(v)) {
      if (seen_[inc.neighbour][c]++ == 0) ++distinct_[inc.neighbour];
    }
  }

  void unset(Vertex v) {
    const auto c = colour_[v];
    colour_[v] = kNone;
    for (const auto& inc : g_.incident(v)) {
      if (--seen_[inc.neighbour][c] == 0) --distinct_[inc.neighbour];
    }
  }

  // Uncoloured vertex of maximum saturation, then degree, then smallest id.
  std::optional<Vertex> pick() const {
    std::optional<Vertex> best;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (colour_[v] != kNone) continue;
      if (!best || distinct_[v] > distinct_[*best] ||
          (distinct_[v] == distinct_[*best] && g_.degree(v) > g_.degree(*best))) {
        best = v;
      }
    }
    return best;
  }

  void init() { distinct_.assign(g_.vertex_count(), 0); }

  const std::vector<std::uint32_t>& colours() const { return colour_; }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> colour_;
  std::vector<std::vector<std::uint32_t>> seen_;
  std::vector<std::size_t> distinct_;
};

ProperVertexColouring pack(const std::vector<std::uint32_t>& colours) {
  ProperVertexColouring pvc;
  pvc.classes = colours;
  for (auto c : colours) pvc.k = std::max(pvc.k, c + 1);
  return pvc;
}

ProperVertexColouring dsatur(const Graph& g) {
  Saturation sat(g);
  sat.init();
  while (const auto v = sat.pick()) {
    std::uint32_t c = 0;
    while (!sat.allowed(*v, c)) ++c;
    sat.set(*v, c);
  }
  return pack(sat.colours());
}

// Greedy clique on vertices by descending degree; a lower bound on chi.
std::size_t greedy_clique(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t best = 0;
  for (Vertex start : order) {
    std::vector<Vertex> clique{start};
    for (Vertex v : order) {
      if (v == start) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return g.adjacent(v, w); })) {
        clique.push_back(v);
      }
    }
    best = std::max(best, clique.size());
  }
  return best;
}

class ExactColourer {
 public:
  explicit ExactColourer(const Graph& g) : g_(g), sat_(g) {}

  ProperVertexColouring run() {
    best_ = dsatur(g_);
    lower_ = std::min<std::size_t>(greedy_clique(g_), best_.k);
    if (best_.k <= lower_) return best_;
    sat_.init();
    search(0, 0);
    return best_;
  }

 private:
  void search(std::size_t coloured, std::uint32_t used) {
    if (best_.k <= lower_) return;
    if (coloured == g_.vertex_count()) {
      best_ = pack(sat_.colours());
      return;
    }
    const Vertex v = *sat_.pick();
    // A new class is only tried if it still beats the incumbent.
    const std::uint32_t limit = std::min<std::uint32_t>(used + 1, best_.k - 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (!sat_.allowed(v, c)) continue;
      sat_.set(v, c);
      search(coloured + 1, std::max(used, c + 1));
      sat_.unset(v);
      if (best_.k <= lower_) return;
    }
  }

  const Graph& g_;
  Saturation sat_;
  ProperVertexColouring best_;
  std::size_t lower_ = 0;
};

}  // namespace

ProperVertexColouring proper_vertex_colouring(const Graph& g, PvcStrategy strategy, std::size_t exact_vertex_ceiling) {
  if (strategy == PvcStrategy::dsatur) return dsatur(g);
  if (g.vertex_count() > exact_vertex_ceiling) {
    throw PreconditionError("exact vertex colouring refused: " + std::to_string(g.vertex_count()) +
                            " vertices exceed the ceiling of " + std::to_string(exact_vertex_ceiling));
  }
  return ExactColourer(g).run();
}

bool is_proper(const Graph& g, const ProperVertexColouring& pvc) {
  if (pvc.classes.size() != g.vertex_count()) return false;
  std::vector<char> used(pvc.k, 0);
  for (auto c : pvc.classes) {
    if (c >= pvc.k) return false;
    used[c] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return pvc.classes[e.u] == pvc.classes[e.v]; });
}

std::string to_string(PvcStrategy s) { return s == PvcStrategy::exact ? "exact" : "dsatur"; }

}  // namespace cfedge
