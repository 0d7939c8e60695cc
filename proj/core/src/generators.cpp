#include "cfedge/generators.hpp"

#include <charconv>
#include <queue>
#include <vector>

namespace cfedge {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SeededRng::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

double SeededRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void require_probability(double p) {
  require(p >= 0.0 && p <= 1.0, "probability must lie in [0,1], got " + std::to_string(p));
}

}  // namespace

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  Pairs pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edges(n, pairs);
}

Graph cycle_graph(std::size_t k) {
  require(k >= 3, "cycle needs k >= 3");
  Pairs pairs;
  for (Vertex i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(static_cast<Vertex>(k - 1), 0);
  return Graph::from_edges(k, pairs);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  Pairs pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph::from_edges(n, pairs);
}

Graph complete_bipartite_graph(std::size_t n, std::size_t m) {
  require(n >= 1 && m >= 1, "complete bipartite graph needs n, m >= 1");
  Pairs pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < m; ++j) pairs.emplace_back(i, static_cast<Vertex>(n + j));
  }
  return Graph::from_edges(n + m, pairs);
}

Graph complete_binary_tree(std::size_t height) {
  require(height <= 20, "complete binary tree height must be <= 20");
  const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
  Pairs pairs;
  for (Vertex child = 1; child < n; ++child) pairs.emplace_back((child - 1) / 2, child);
  return Graph::from_edges(n, pairs);
}

Graph tree_from_prufer(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    require(x < n, "Prufer entry out of range");
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  Pairs pairs;
  for (Vertex x : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    pairs.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  pairs.emplace_back(a, leaves.top());
  return Graph::from_edges(n, pairs);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  SeededRng rng(seed);
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = static_cast<Vertex>(rng.below(n));
  return tree_from_prufer(seq);
}

Graph random_bipartite(std::size_t n, std::size_t m, double p, std::uint64_t seed) {
  require(n >= 1 && m >= 1, "random bipartite graph needs n, m >= 1");
  require_probability(p);
  SeededRng rng(seed);
  Pairs pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < m; ++j) {
      if (rng.bernoulli(p)) pairs.emplace_back(i, static_cast<Vertex>(n + j));
    }
  }
  return Graph::from_edges(n + m, pairs);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require_probability(p);
  SeededRng rng(seed);
  Pairs pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) pairs.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, pairs);
}

Graph petersen_graph() {
  Pairs pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);            // outer cycle
    pairs.emplace_back(i, i + 5);                  // spokes
    pairs.emplace_back(i + 5, (i + 2) % 5 + 5);    // inner pentagram
  }
  return Graph::from_edges(10, pairs);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view spec) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw GraphError("bad integer '" + std::string(s) + "' in generator spec '" + std::string(spec) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::string_view spec) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw GraphError("bad number '" + std::string(s) + "' in generator spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

Graph generate(std::string_view spec, std::uint64_t default_seed) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<std::string_view> args;
  if (colon != std::string_view::npos) args = split(spec.substr(colon + 1), ',');

  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw GraphError("generator '" + std::string(name) + "' takes " + std::to_string(lo) +
                       (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments: '" + std::string(spec) + "'");
    }
  };
  auto u = [&](std::size_t i) { return parse_uint(args.at(i), spec); };
  auto seed_at = [&](std::size_t i) { return args.size() > i ? u(i) : default_seed; };

  if (name == "path") {
    arity(1, 1);
    return path_graph(u(0));
  }
  if (name == "cycle") {
    arity(1, 1);
    return cycle_graph(u(0));
  }
  if (name == "complete") {
    arity(1, 1);
    return complete_graph(u(0));
  }
  if (name == "complete-bipartite") {
    arity(2, 2);
    return complete_bipartite_graph(u(0), u(1));
  }
  if (name == "complete-binary-tree") {
    arity(1, 1);
    return complete_binary_tree(u(0));
  }
  if (name == "random-tree") {
    arity(1, 2);
    return random_tree(u(0), seed_at(1));
  }
  if (name == "random-bipartite") {
    arity(3, 4);
    return random_bipartite(u(0), u(1), parse_double(args[2], spec), seed_at(3));
  }
  if (name == "gnp") {
    arity(2, 3);
    return gnp(u(0), parse_double(args[1], spec), seed_at(2));
  }
  if (name == "petersen") {
    arity(0, 0);
    return petersen_graph();
  }
  throw GraphError("unknown generator '" + std::string(name) + "'");
}

}  // namespace cfedge
