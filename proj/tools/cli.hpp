#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cfedge::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUnsatisfied = 1,
  kInputError = 2,
  kCeiling = 3,
  kCounterexample = 4,
};

enum class OutputFormat { text, json };

// Everything one invocation needs; echoed into every report.
struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input_path;
  std::optional<std::string> generator;
  std::string format = "edgelist";
  std::string algorithm = "auto";
  std::string pvc = "auto";
  std::string mode = "full";
  std::string survey_kind;
  std::optional<std::string> colouring_path;
  std::optional<std::string> colouring_out;
  std::size_t max_n = 0;
  std::size_t workers = 1;
  std::size_t vertex_ceiling = 20;
  std::optional<std::size_t> edge_ceiling;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::text;
};

// Parses argv and runs one subcommand, writing the report to `out` and
// diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfedge::cli
