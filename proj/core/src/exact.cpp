#include "cfedge/exact.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace cfedge {

ExactConfig ExactConfig::from_environment() {
  ExactConfig config;
  if (const char* raw = std::getenv("CFEDGE_CEILING_EDGES")) {
    std::size_t v = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, v);
    if (ec == std::errc{} && ptr == end && v > 0) {
      config.full_edge_ceiling = v;
      config.subgraph_edge_ceiling = v;
    }
  }
  return config;
}

std::string to_string(SearchMode mode) { return mode == SearchMode::full ? "full" : "subgraph"; }

namespace {

constexpr int kBlank = -1;

class Search {
 public:
  Search(const Graph& g, std::size_t colours, SearchMode mode)
      : g_(g), colours_(static_cast<int>(colours)), mode_(mode), colour_(g.edge_count(), kBlank) {
    const std::size_t m = g.edge_count();
    neighbourhood_.resize(m);
    for (EdgeId e = 0; e < m; ++e) neighbourhood_[e] = g.closed_neighbourhood(e);
    order_.resize(m);
    for (EdgeId e = 0; e < m; ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      return neighbourhood_[a].size() > neighbourhood_[b].size();
    });
    std::vector<std::size_t> position(m);
    for (std::size_t p = 0; p < m; ++p) position[order_[p]] = p;
    ready_at_.resize(m);
    for (EdgeId f = 0; f < m; ++f) {
      std::size_t last = 0;
      for (EdgeId x : neighbourhood_[f]) last = std::max(last, position[x]);
      ready_at_[last].push_back(f);
    }
    counts_.resize(static_cast<std::size_t>(colours_) + 1);
  }

  bool run() { return descend(0, -1); }

  EdgeColouring witness() const {
    EdgeColouring c(colour_.size());
    for (EdgeId e = 0; e < colour_.size(); ++e) {
      if (colour_[e] != kBlank) c.assign(e, static_cast<Colour>(colour_[e]));
    }
    return c;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool satisfied(EdgeId f) {
    std::fill(counts_.begin(), counts_.end(), 0);
    for (EdgeId x : neighbourhood_[f]) {
      if (colour_[x] != kBlank) ++counts_[static_cast<std::size_t>(colour_[x])];
    }
    return std::find(counts_.begin(), counts_.end(), 1) != counts_.end();
  }

  bool try_option(std::size_t p, int option, int max_used) {
    ++nodes_;
    colour_[order_[p]] = option;
    for (EdgeId f : ready_at_[p]) {
      if (!satisfied(f)) return false;
    }
    return descend(p + 1, std::max(max_used, option));
  }

  bool descend(std::size_t p, int max_used) {
    if (p == order_.size()) return true;
    const int top = std::min(max_used + 1, colours_ - 1);
    for (int q = 0; q <= top; ++q) {
      if (try_option(p, q, max_used)) return true;
    }
    if (mode_ == SearchMode::subgraph && try_option(p, kBlank, max_used)) return true;
    colour_[order_[p]] = kBlank;
    return false;
  }

  const Graph& g_;
  int colours_;
  SearchMode mode_;
  std::vector<int> colour_;
  std::vector<std::vector<EdgeId>> neighbourhood_;
  std::vector<EdgeId> order_;
  std::vector<std::vector<EdgeId>> ready_at_;
  std::vector<int> counts_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<EdgeColouring> cf_feasible(const Graph& g, std::size_t colours, SearchMode mode,
                                         std::uint64_t* nodes_explored) {
  if (colours == 0) throw std::invalid_argument("cf_feasible needs at least one colour");
  Search search(g, colours, mode);
  const bool found = search.run();
  if (nodes_explored) *nodes_explored += search.nodes();
  if (!found) return std::nullopt;
  return search.witness();
}

ExactResult min_colours(const Graph& g, SearchMode mode, const ExactConfig& config) {
  const std::size_t ceiling = mode == SearchMode::full ? config.full_edge_ceiling : config.subgraph_edge_ceiling;
  if (g.edge_count() > ceiling) {
    throw CeilingError("exact " + to_string(mode) + " search limited to " + std::to_string(ceiling) +
                       " edges; graph has " + std::to_string(g.edge_count()));
  }
  if (g.has_isolated_vertex()) throw ColouringError("exact search needs a graph without isolated vertices");
  ExactResult result;
  result.witness = EdgeColouring(g.edge_count());
  if (g.edge_count() == 0) return result;
  for (std::size_t c = 1;; ++c) {
    if (auto w = cf_feasible(g, c, mode, &result.nodes_explored)) {
      result.value = c;
      result.witness = std::move(*w);
      return result;
    }
  }
}

ExactResult min_cf_colours(const Graph& g, const ExactConfig& config) {
  return min_colours(g, SearchMode::full, config);
}

ExactResult min_scf_colours(const Graph& g, const ExactConfig& config) {
  return min_colours(g, SearchMode::subgraph, config);
}

}  // namespace cfedge
