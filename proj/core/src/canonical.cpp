#include "cfedge/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cfedge/classify.hpp"
#include "cfedge/graph_io.hpp"

namespace cfedge {

namespace {

// --- trees: AHU encoding from the centre ------------------------------------

std::vector<Vertex> tree_centres(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (const auto& inc : g.incident(leaf)) {
        if (--degree[inc.neighbour] == 1) next.push_back(inc.neighbour);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

class TreeEncoder {
 public:
  explicit TreeEncoder(const Graph& g) : g_(g) {}

  std::string encode(Vertex v, std::optional<Vertex> parent) {
    std::vector<std::string> kids;
    for (const auto& inc : g_.incident(v)) {
      if (inc.neighbour != parent) kids.push_back(encode(inc.neighbour, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ')';
    return out;
  }

  // Preorder labelling with children visited in encoding order.
  void label(Vertex v, std::optional<Vertex> parent, std::vector<Vertex>& lab, Vertex& next) {
    lab[v] = next++;
    std::vector<std::pair<std::string, Vertex>> kids;
    for (const auto& inc : g_.incident(v)) {
      if (inc.neighbour != parent) kids.emplace_back(encode(inc.neighbour, v), inc.neighbour);
    }
    std::sort(kids.begin(), kids.end());
    for (const auto& [code, child] : kids) label(child, v, lab, next);
  }

 private:
  const Graph& g_;
};

std::vector<Vertex> tree_labelling(const Graph& g) {
  std::vector<Vertex> lab(g.vertex_count());
  if (g.vertex_count() == 0) return lab;
  TreeEncoder enc(g);
  const auto centres = tree_centres(g);
  Vertex root = centres.front();
  if (centres.size() == 2 && enc.encode(centres[1], std::nullopt) < enc.encode(centres[0], std::nullopt)) {
    root = centres[1];
  }
  Vertex next = 0;
  enc.label(root, std::nullopt, lab, next);
  return lab;
}

// --- general graphs: individualization-refinement ---------------------------

using Partition = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()), adj_(n_, std::vector<char>(n_, 0)) {
    for (const Edge& e : g.edges()) adj_[e.u][e.v] = adj_[e.v][e.u] = 1;
  }

  std::vector<Vertex> run() {
    Partition start(1);
    for (Vertex v = 0; v < n_; ++v) start[0].push_back(v);
    std::vector<Vertex> prefix;
    search(std::move(start), prefix);
    return best_label_;
  }

 private:
  void refine(Partition& p) const {
    std::vector<std::size_t> cell_of(n_);
    for (;;) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (Vertex v : p[i]) cell_of[v] = i;
      }
      Partition next;
      next.reserve(p.size());
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(p.size(), 0);
          for (const auto& inc : g_.incident(v)) ++sig[cell_of[inc.neighbour]];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == p.size();
      p = std::move(next);
      if (stable) return;
    }
  }

  std::vector<char> key_for(const std::vector<Vertex>& lab) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[lab[v]] = v;
    std::vector<char> key;
    key.reserve(n_ * (n_ - 1) / 2);
    for (Vertex j = 1; j < n_; ++j) {
      for (Vertex i = 0; i < j; ++i) key.push_back(adj_[at[i]][at[j]]);
    }
    return key;
  }

  // perm[v] = w with ref_label[w] == label[v]
  std::vector<Vertex> automorphism(const std::vector<Vertex>& ref_label, const std::vector<Vertex>& label) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[ref_label[v]] = v;
    std::vector<Vertex> perm(n_);
    for (Vertex v = 0; v < n_; ++v) perm[v] = at[label[v]];
    return perm;
  }

  void leaf(const Partition& p) {
    std::vector<Vertex> lab(n_);
    for (std::size_t i = 0; i < p.size(); ++i) lab[p[i][0]] = static_cast<Vertex>(i);
    auto key = key_for(lab);
    if (best_key_.empty() && best_label_.empty()) {
      first_key_ = best_key_ = key;
      first_label_ = best_label_ = lab;
      return;
    }
    if (key == first_key_) {
      automorphisms_.push_back(automorphism(first_label_, lab));
    } else if (key == best_key_) {
      automorphisms_.push_back(automorphism(best_label_, lab));
    } else if (key < best_key_) {
      best_key_ = std::move(key);
      best_label_ = std::move(lab);
    }
  }

  Vertex find(std::vector<Vertex>& parent, Vertex x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool same_orbit_as_explored(Vertex w, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) parent[find(parent, v)] = find(parent, gamma[v]);
    }
    const Vertex rw = find(parent, w);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return find(parent, u) == rw; });
  }

  void search(Partition p, std::vector<Vertex>& prefix) {
    refine(p);
    if (p.size() == n_) {
      leaf(p);
      return;
    }
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size())) target = i;
    }
    std::vector<Vertex> candidates = p[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<Vertex> explored;
    for (Vertex w : candidates) {
      if (same_orbit_as_explored(w, explored, prefix)) continue;
      explored.push_back(w);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({w});
        std::vector<Vertex> rest;
        for (Vertex x : p[i]) {
          if (x != w) rest.push_back(x);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<char>> adj_;
  std::vector<char> first_key_;
  std::vector<Vertex> first_label_;
  std::vector<char> best_key_;
  std::vector<Vertex> best_label_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) {
  CanonicalLabelling out;
  if (g.vertex_count() == 0) {
    out.graph = g;
    out.graph6 = emit_graph6(g);
    return out;
  }
  out.label = is_tree(g) ? tree_labelling(g) : Canonizer(g).run();
  out.graph6 = emit_graph6(permute_vertices(g, out.label));
  out.graph = parse_graph6(out.graph6);
  return out;
}

std::string canonical_form(const Graph& g) { return canonical_labelling(g).graph6; }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace cfedge
