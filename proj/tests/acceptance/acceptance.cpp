// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfedge/bfs.hpp"
#include "cfedge/constructors.hpp"
#include "cfedge/enumerate.hpp"
#include "cfedge/exact.hpp"
#include "cfedge/generators.hpp"
#include "cfedge/survey.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace cfedge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Graph strip_isolated(const Graph& g) {
  std::vector<EdgeId> all(g.edge_count());
  for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  return edge_subgraph(g, all).graph;
}

bool has_isolated_edge(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) return true;
  }
  return false;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

Outcome exact_values() {
  Outcome o;
  const auto t0 = Clock::now();
  auto expect = [&](const std::string& name, const Graph& g, std::size_t want) {
    const std::size_t got = min_cf_colours(g).value;
    if (got != want) o.fail(name + " gave " + std::to_string(got) + ", expected " + std::to_string(want) + "; ");
  };
  for (std::size_t k = 3; k <= 10; ++k) expect("C_" + std::to_string(k), cycle_graph(k), 2);
  expect("K_{3,3}", complete_bipartite_graph(3, 3), 3);
  expect("K_{3,4}", complete_bipartite_graph(3, 4), 3);
  for (std::size_t m = 2; m <= 4; ++m) expect("K_{2," + std::to_string(m) + "}", complete_bipartite_graph(2, m), 2);
  expect("complete_binary_tree(3)", complete_binary_tree(3), 3);
  const double secs = seconds_since(t0);
  if (secs >= 300) o.fail("runtime " + std::to_string(secs) + "s; ");
  o.detail << "runtime " << secs << "s";
  return o;
}

Outcome tree_levels() {
  Outcome o;
  const auto trees = enumerate_trees(10);
  std::size_t violations = 0;
  for (const Graph& t : trees) {
    Vertex leaf = 0;
    while (t.degree(leaf) != 1) ++leaf;
    const auto c = colour_tree(t, leaf);
    if (!verify(t, c).satisfied || c.colours_used() > 3) ++violations;
    const BfsTree bfs = bfs_tree(t, leaf);
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
      const std::size_t i = bfs.level[u];
      if (i == 0) continue;
      const Palette p = vertex_palette(t, c, u);
      if (p.count((i - 1) % 3) != 1 || p.count((i - 1) % 3) + p.count(i % 3) != p.total()) ++violations;
    }
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      Vertex u = t.edge(e).u;
      if (bfs.level[t.edge(e).v] < bfs.level[u]) u = t.edge(e).v;
      const std::size_t i = bfs.level[u];
      if (i == 0) continue;
      const Palette p = edge_palette(t, c, e);
      if (p.count((i - 1) % 3) != 1 ||
          p.count((i - 1) % 3) + p.count(i % 3) + p.count((i + 1) % 3) != p.total()) {
        ++violations;
      }
    }
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  o.detail << trees.size() << " trees, " << violations << " violations";
  return o;
}

Outcome bipartite_bound() {
  Outcome o;
  std::vector<Graph> graphs = enumerate_connected_bipartite(7);
  const std::size_t exhaustive = graphs.size();
  SeededRng rng(2024);
  while (graphs.size() < exhaustive + 200) {
    const std::size_t n = 1 + rng.below(12);
    const std::size_t m = 1 + rng.below(12);
    const double p = 0.1 + 0.6 * rng.unit();
    const Graph raw = random_bipartite(n, m, p, rng.next());
    if (raw.edge_count() == 0) continue;
    graphs.push_back(strip_isolated(raw));
  }
  std::size_t violations = 0, completed = 0;
  for (const Graph& g : graphs) {
    const auto c = colour_bipartite(g);
    if (!verify(g, c).satisfied || c.colours_used() > 3) ++violations;
    if (!has_isolated_edge(g)) {
      ++completed;
      const auto full = complete_with_fresh_colour(g, c);
      if (!full.fully_assigned() || !verify(g, full).satisfied || full.colours_used() > 4) ++violations;
    }
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  o.detail << exhaustive << " exhaustive + 200 random, " << completed << " completed, " << violations << " violations";
  return o;
}

Outcome general_bound() {
  Outcome o;
  SeededRng rng(7);
  std::size_t instances = 0, violations = 0;
  while (instances < 200) {
    const std::size_t n = 2 + rng.below(17);
    const double p = rng.below(2) ? 0.5 : 0.2;
    const Graph raw = gnp(n, p, rng.next());
    if (raw.edge_count() == 0) continue;
    const Graph g = strip_isolated(raw);
    const auto pvc = proper_vertex_colouring(g, PvcStrategy::exact);
    const std::size_t bound = 3 * ceil_log2(pvc.k);
    const auto c = colour_general(g, pvc);
    if (!verify(g, c).satisfied || c.colours_used() > bound) ++violations;
    const auto a = colour_auto(g);
    if (!a.colouring.fully_assigned() || !verify(g, a.colouring).satisfied || a.colouring.colours_used() > bound + 1) {
      ++violations;
    }
    ++instances;
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  o.detail << instances << " instances, " << violations << " violations";
  return o;
}

Outcome complete_graphs() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  for (std::size_t n = 2; n <= 64; ++n) {
    const Graph k = complete_graph(n);
    const auto c = colour_complete(k);
    if (!verify(k, c).satisfied || c.colours_used() > 2 * ceil_log2(n)) ++violations;
  }
  const double secs = seconds_since(t0);
  if (violations) o.fail(std::to_string(violations) + " violations; ");
  if (secs >= 60) o.fail("runtime " + std::to_string(secs) + "s; ");
  o.detail << "K_2..K_64, " << violations << " violations, " << secs << "s";
  return o;
}

Outcome sandwich() {
  Outcome o;
  std::size_t checked = 0, violations = 0;
  for (const Graph& g : enumerate_connected_graphs(6)) {
    if (has_isolated_edge(g)) continue;
    const auto scf = min_scf_colours(g).value;
    const auto cf = min_cf_colours(g).value;
    if (scf > cf || cf > scf + 1) ++violations;
    ++checked;
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  o.detail << checked << " graphs, " << violations << " violations";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t checked = 0, mismatches = 0;
  for (const Graph& g : enumerate_connected_graphs(5)) {
    const int want = oracle::min_colours(oracle::edges_of(g), false);
    if (static_cast<int>(min_cf_colours(g).value) != want) ++mismatches;
    ++checked;
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  o.detail << checked << " graphs, " << mismatches << " mismatches";
  return o;
}

Outcome complete_lower_bound() {
  Outcome o;
  for (std::size_t n : {4, 5, 6}) {
    const double x = std::log2(static_cast<double>(n));
    const auto floor_value = static_cast<long>(std::floor(x - std::log2(x) - 1));
    const auto value = static_cast<long>(min_cf_colours(complete_graph(n)).value);
    if (value <= floor_value) o.fail("K_" + std::to_string(n) + " not above bound; ");
    o.detail << "K_" << n << "=" << value << ">" << floor_value << " ";
  }
  return o;
}

Outcome survey_reproducible() {
  Outcome o;
  auto run_survey = [](const std::string& workers) {
    std::ostringstream out, err;
    const int code = cli::run({"survey", "trees", "--max-n", "10", "--workers", workers}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = run_survey("1");
  const auto b = run_survey("1");
  const auto c = run_survey("4");
  if (a.first != 0 || b.first != 0 || c.first != 0) o.fail("nonzero exit; ");
  if (a.second != b.second) o.fail("two runs differ; ");
  if (a.second != c.second) o.fail("workers 1 and 4 differ; ");
  const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::string key = "# n=" + std::to_string(n) + " trees=" + std::to_string(expected[n - 2]) + " ";
    if (a.second.find(key) == std::string::npos) o.fail("tree count mismatch at n=" + std::to_string(n) + "; ");
  }
  o.detail << a.second.size() << " bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const std::vector<Criterion> criteria{
      {"exact values", exact_values},
      {"tree colouring and palette shapes", tree_levels},
      {"bipartite colouring", bipartite_bound},
      {"general colouring bounds", general_bound},
      {"complete graphs", complete_graphs},
      {"partial/full sandwich", sandwich},
      {"oracle equivalence", oracle_equivalence},
      {"complete graph lower bound", complete_lower_bound},
      {"survey reproducibility", survey_reproducible},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name << ": " << o.detail.str()
              << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
