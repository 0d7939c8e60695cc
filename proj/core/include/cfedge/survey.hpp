#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cfedge/enumerate.hpp"
#include "cfedge/exact.hpp"

namespace cfedge {

struct SurveyRecord {
  std::string graph6;  // canonical form
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t exact_value = 0;
};

struct SurveyOptions {
  std::size_t workers = 1;
  ExactConfig exact;
  EnumerationLimits limits;
};

struct TreeOrderSummary {
  std::size_t trees = 0;
  std::array<std::size_t, 4> by_value{};  // index = exact value 0..3
};

// Trees with exact value 3, plus per-order counts, for orders 2..max_n.
struct TreeSurvey {
  std::size_t max_n = 0;
  std::vector<SurveyRecord> records;  // by n, then canonical form
  std::map<std::size_t, TreeOrderSummary> per_order;
};

TreeSurvey survey_trees(std::size_t max_n, const SurveyOptions& options = {});

// Exact value of every connected bipartite graph on 2..max_n vertices.
// Reports findings only; nothing here asserts an upper bound.
struct ConjectureReport {
  std::size_t max_n = 0;
  std::vector<SurveyRecord> records;  // by n, then canonical form
  std::size_t max_value = 0;
  std::vector<SurveyRecord> counterexamples;  // value above 3
};

ConjectureReport conjecture_scan(std::size_t max_n, const SurveyOptions& options = {});

// One "graph6\tn\tm\tvalue" line per record, then '#'-prefixed summary lines.
std::string format_survey(const TreeSurvey& survey);
std::string format_survey(const ConjectureReport& report);

// Exact values of the given graphs, computed by `workers` threads. The
// result order is the input order regardless of worker count.
std::vector<std::size_t> exact_values(const std::vector<Graph>& graphs, SearchMode mode, const SurveyOptions& options);

}  // namespace cfedge
