#include "cfedge/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "cfedge/canonical.hpp"

namespace cfedge {

std::vector<std::size_t> exact_values(const std::vector<Graph>& graphs, SearchMode mode, const SurveyOptions& options) {
  std::vector<std::size_t> values(graphs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        values[i] = min_colours(graphs[i], mode, options.exact).value;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, graphs.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

namespace {

SurveyRecord record_for(const Graph& g, std::size_t value) {
  return {canonical_form(g), g.vertex_count(), g.edge_count(), value};
}

void sort_records(std::vector<SurveyRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
    return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
  });
}

std::string record_line(const SurveyRecord& r) {
  return r.graph6 + "\t" + std::to_string(r.n) + "\t" + std::to_string(r.m) + "\t" + std::to_string(r.exact_value) +
         "\n";
}

}  // namespace

TreeSurvey survey_trees(std::size_t max_n, const SurveyOptions& options) {
  if (max_n > options.limits.max_tree_order) {
    throw CeilingError("tree survey limited to order " + std::to_string(options.limits.max_tree_order));
  }
  TreeSurvey survey;
  survey.max_n = max_n;
  std::vector<Graph> trees;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto batch = enumerate_trees(n, options.limits);
    trees.insert(trees.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  const auto values = exact_values(trees, SearchMode::full, options);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto& summary = survey.per_order[trees[i].vertex_count()];
    ++summary.trees;
    ++summary.by_value.at(values[i]);
    if (values[i] == 3) survey.records.push_back(record_for(trees[i], values[i]));
  }
  sort_records(survey.records);
  return survey;
}

ConjectureReport conjecture_scan(std::size_t max_n, const SurveyOptions& options) {
  ConjectureReport report;
  report.max_n = max_n;
  const auto graphs = enumerate_connected_bipartite(max_n, options.limits);
  const auto values = exact_values(graphs, SearchMode::full, options);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.records.push_back(record_for(graphs[i], values[i]));
    report.max_value = std::max(report.max_value, values[i]);
    if (values[i] > 3) report.counterexamples.push_back(report.records.back());
  }
  sort_records(report.records);
  sort_records(report.counterexamples);
  return report;
}

std::string format_survey(const TreeSurvey& survey) {
  std::string out;
  for (const auto& r : survey.records) out += record_line(r);
  std::size_t total = 0;
  std::array<std::size_t, 4> by_value{};
  for (const auto& [n, s] : survey.per_order) {
    out += "# n=" + std::to_string(n) + " trees=" + std::to_string(s.trees);
    for (std::size_t v = 1; v <= 3; ++v) out += " value" + std::to_string(v) + "=" + std::to_string(s.by_value[v]);
    out += "\n";
    total += s.trees;
    for (std::size_t v = 0; v < 4; ++v) by_value[v] += s.by_value[v];
  }
  out += "# total trees=" + std::to_string(total);
  for (std::size_t v = 1; v <= 3; ++v) out += " value" + std::to_string(v) + "=" + std::to_string(by_value[v]);
  out += "\n";
  return out;
}

std::string format_survey(const ConjectureReport& report) {
  std::string out;
  for (const auto& r : report.records) out += record_line(r);
  out += "# graphs=" + std::to_string(report.records.size()) + " max_n=" + std::to_string(report.max_n) + "\n";
  out += "# max_value=" + std::to_string(report.max_value) + "\n";
  out += "# counterexamples=" + std::to_string(report.counterexamples.size()) + "\n";
  for (const auto& r : report.counterexamples) out += "# counterexample " + record_line(r);
  return out;
}

}  // namespace cfedge
