#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "cfedge/classify.hpp"
#include "cfedge/colouring.hpp"
#include "cfedge/constructors.hpp"
#include "cfedge/exact.hpp"
#include "cfedge/generators.hpp"
#include "cfedge/graph_io.hpp"
#include "cfedge/survey.hpp"

namespace cfedge::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.generator.has_value() == cfg.input_path.has_value()) {
    throw InputError("exactly one of --input and --gen is required");
  }
  if (cfg.generator) return generate(*cfg.generator, cfg.seed);
  std::string text = read_file(*cfg.input_path);
  return parse_graph(text, parse_format_name(cfg.format));
}

ExactConfig exact_config(const RunConfig& cfg) {
  ExactConfig config = ExactConfig::from_environment();
  if (cfg.edge_ceiling) {
    config.full_edge_ceiling = *cfg.edge_ceiling;
    config.subgraph_edge_ceiling = *cfg.edge_ceiling;
  }
  return config;
}

std::string source_line(const RunConfig& cfg) {
  std::string s = "# source ";
  s += cfg.generator ? "gen:" + *cfg.generator : "input:" + cfg.input_path.value_or("") + " format=" + cfg.format;
  s += " seed=" + std::to_string(cfg.seed) + "\n";
  return s;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["subcommand"] = cfg.subcommand;
  if (cfg.generator) j["generator"] = *cfg.generator;
  if (cfg.input_path) {
    j["input"] = *cfg.input_path;
    j["format"] = cfg.format;
  }
  j["seed"] = cfg.seed;
  return j;
}

Json colouring_json(const EdgeColouring& c) {
  Json arr = Json::array();
  for (EdgeId e = 0; e < c.size(); ++e) arr.push_back(c[e] ? Json(*c[e]) : Json(nullptr));
  return arr;
}

Json verification_json(const Graph& g, const VerificationReport& r) {
  Json j;
  j["satisfied"] = r.satisfied;
  j["colours_used"] = r.colours_used;
  Json bad = Json::array();
  for (const auto& u : r.unsatisfied_edges) {
    bad.push_back({{"edge", u.edge},
                   {"u", g.edge(u.edge).u},
                   {"v", g.edge(u.edge).v},
                   {"palette", u.palette.to_string()}});
  }
  j["unsatisfied_edges"] = bad;
  return j;
}

std::string verification_text(const Graph& g, const VerificationReport& r, const char* prefix) {
  std::string s = std::string(prefix) + "verified=" + (r.satisfied ? "yes" : "no") +
                  " colours_used=" + std::to_string(r.colours_used) +
                  " unsatisfied=" + std::to_string(r.unsatisfied_edges.size()) + "\n";
  for (const auto& u : r.unsatisfied_edges) {
    const Edge& uv = g.edge(u.edge);
    s += std::string(prefix) + "unsatisfied edge=" + std::to_string(u.edge) + " " + describe_pair(uv.u, uv.v) +
         " palette=" + u.palette.to_string() + "\n";
  }
  return s;
}

Vertex smallest_leaf(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) return v;
  }
  throw PreconditionError("graph has no leaf");
}

int cmd_colour(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");

  PvcStrategy strategy = cfg.pvc == "dsatur" ? PvcStrategy::dsatur : PvcStrategy::exact;
  if (cfg.pvc == "auto" && g.vertex_count() > cfg.vertex_ceiling) strategy = PvcStrategy::dsatur;

  EdgeColouring colouring;
  BoundReport report;
  if (cfg.algorithm == "auto") {
    auto result = colour_auto(g, AutoOptions{cfg.vertex_ceiling});
    colouring = std::move(result.colouring);
    report = std::move(result.report);
  } else {
    const auto pvc = proper_vertex_colouring(g, strategy, cfg.vertex_ceiling);
    const std::string& a = cfg.algorithm;
    if (a == "tree") {
      if (!is_tree(g)) throw PreconditionError("graph is not a tree");
      colouring = colour_tree(g, smallest_leaf(g));
    } else if (a == "cycle") {
      colouring = colour_cycle(g);
    } else if (a == "bipartite") {
      colouring = colour_bipartite(g);
    } else if (a == "complete") {
      colouring = colour_complete(g);
    } else if (a == "complete-bipartite") {
      colouring = colour_complete_bipartite_full(g);
    } else if (a == "complete-bipartite-partial") {
      colouring = colour_complete_bipartite_partial(g);
    } else {
      colouring = colour_general(g, pvc);
    }
    report = make_bound_report(g, pvc.k, colouring, a);
    report.strategy = strategy;
  }
  const auto verdict = verify(g, colouring);

  if (cfg.colouring_out) {
    std::ofstream file(*cfg.colouring_out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + *cfg.colouring_out + "'");
    file << write_colouring(colouring);
  }

  if (cfg.output == OutputFormat::json) {
    Json j;
    j["command"] = "colour";
    j["config"] = config_json(cfg);
    j["config"]["algorithm"] = cfg.algorithm;
    j["config"]["pvc"] = cfg.pvc;
    j["config"]["vertex_ceiling"] = cfg.vertex_ceiling;
    j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    j["colouring"] = colouring_json(colouring);
    j["report"] = {{"delta_max", report.delta_max},
                   {"delta_min", report.delta_min},
                   {"class_count", report.class_count},
                   {"bound_scf", report.bound_scf},
                   {"bound_cf", report.bound_cf},
                   {"bound_delta", report.bound_delta},
                   {"delta_bound_applies", report.delta_bound_applies},
                   {"colours_used", report.colours_used},
                   {"construction", report.construction},
                   {"strategy", to_string(report.strategy)}};
    j["verification"] = verification_json(g, verdict);
    out << j.dump(2) << "\n";
  } else {
    out << "# cfedge colour\n" << source_line(cfg);
    out << "# graph n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    out << "# algorithm=" << cfg.algorithm << " construction=" << report.construction
        << " strategy=" << to_string(report.strategy) << " vertex_ceiling=" << cfg.vertex_ceiling << "\n";
    out << write_colouring(colouring);
    out << "# bound delta_max=" << report.delta_max << " delta_min=" << report.delta_min
        << " class_count=" << report.class_count << " bound_scf=" << report.bound_scf
        << " bound_cf=" << report.bound_cf << " bound_delta=" << report.bound_delta
        << " delta_bound_applies=" << (report.delta_bound_applies ? "yes" : "no")
        << " colours_used=" << report.colours_used << "\n";
    out << verification_text(g, verdict, "# ");
  }
  return verdict.satisfied ? kOk : kUnsatisfied;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const EdgeColouring c = read_colouring(read_file(cfg.colouring_path.value()));
  if (c.size() != g.edge_count()) {
    throw InputError("colouring has " + std::to_string(c.size()) + " edges but the graph has " +
                     std::to_string(g.edge_count()));
  }
  const auto verdict = verify(g, c);
  if (cfg.output == OutputFormat::json) {
    Json j;
    j["command"] = "verify";
    j["config"] = config_json(cfg);
    j["config"]["colouring"] = cfg.colouring_path.value();
    j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    j["verification"] = verification_json(g, verdict);
    out << j.dump(2) << "\n";
  } else {
    out << "# cfedge verify\n" << source_line(cfg);
    out << verification_text(g, verdict, "");
  }
  return verdict.satisfied ? kOk : kUnsatisfied;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const SearchMode mode = cfg.mode == "subgraph" ? SearchMode::subgraph : SearchMode::full;
  const ExactConfig config = exact_config(cfg);
  const ExactResult result = min_colours(g, mode, config);
  if (cfg.output == OutputFormat::json) {
    Json j;
    j["command"] = "exact";
    j["config"] = config_json(cfg);
    j["config"]["mode"] = to_string(mode);
    j["config"]["edge_ceiling_full"] = config.full_edge_ceiling;
    j["config"]["edge_ceiling_subgraph"] = config.subgraph_edge_ceiling;
    j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    j["value"] = result.value;
    j["nodes_explored"] = result.nodes_explored;
    j["witness"] = colouring_json(result.witness);
    out << j.dump(2) << "\n";
  } else {
    out << "# cfedge exact\n" << source_line(cfg);
    out << "# mode=" << to_string(mode) << " edge_ceiling_full=" << config.full_edge_ceiling
        << " edge_ceiling_subgraph=" << config.subgraph_edge_ceiling << "\n";
    out << "# graph n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    out << "# value=" << result.value << " nodes_explored=" << result.nodes_explored << "\n";
    out << write_colouring(result.witness);
  }
  return kOk;
}

Json records_json(const std::vector<SurveyRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) {
    arr.push_back({{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"value", r.exact_value}});
  }
  return arr;
}

int cmd_survey(const RunConfig& cfg, std::ostream& out) {
  SurveyOptions options;
  options.workers = cfg.workers;
  options.exact = exact_config(cfg);
  const std::string ceilings = "# edge_ceiling_full=" + std::to_string(options.exact.full_edge_ceiling) +
                               " max_tree_order=" + std::to_string(options.limits.max_tree_order) +
                               " max_bipartite_order=" + std::to_string(options.limits.max_bipartite_order) + "\n";
  Json j;
  j["command"] = "survey";
  j["config"] = {{"subcommand", "survey"},
                 {"kind", cfg.survey_kind},
                 {"max_n", cfg.max_n},
                 {"edge_ceiling_full", options.exact.full_edge_ceiling},
                 {"max_tree_order", options.limits.max_tree_order},
                 {"max_bipartite_order", options.limits.max_bipartite_order}};
  int code = kOk;
  if (cfg.survey_kind == "trees") {
    const TreeSurvey survey = survey_trees(cfg.max_n, options);
    if (cfg.output == OutputFormat::json) {
      j["records"] = records_json(survey.records);
      Json orders = Json::array();
      for (const auto& [n, s] : survey.per_order) {
        orders.push_back({{"n", n},
                          {"trees", s.trees},
                          {"value1", s.by_value[1]},
                          {"value2", s.by_value[2]},
                          {"value3", s.by_value[3]}});
      }
      j["per_order"] = orders;
    } else {
      out << "# cfedge survey trees max_n=" << cfg.max_n << "\n" << ceilings << format_survey(survey);
    }
  } else {
    const ConjectureReport report = conjecture_scan(cfg.max_n, options);
    if (cfg.output == OutputFormat::json) {
      j["records"] = records_json(report.records);
      j["max_value"] = report.max_value;
      j["counterexamples"] = records_json(report.counterexamples);
    } else {
      out << "# cfedge survey bipartite max_n=" << cfg.max_n << "\n" << ceilings << format_survey(report);
    }
    if (!report.counterexamples.empty()) code = kCounterexample;
  }
  if (cfg.output == OutputFormat::json) out << j.dump(2) << "\n";
  return code;
}

void add_graph_input(CLI::App* sub, RunConfig& cfg) {
  auto* in = sub->add_option("--input,-i", cfg.input_path, "graph file, '-' for stdin");
  auto* gen = sub->add_option("--gen,-g", cfg.generator, "generator spec, e.g. cycle:5 or gnp:30,0.2,7");
  in->excludes(gen);
  sub->add_option("--format,-f", cfg.format, "input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  sub->add_option("--seed", cfg.seed, "seed for random generators whose spec omits one");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-free edge colouring: constructions, verification and exact search", "cfedge"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string output = "text";
  const auto output_check = CLI::IsMember({"text", "json"});

  auto* colour = app.add_subcommand("colour", "colour a graph with one of the constructions");
  add_graph_input(colour, cfg);
  colour->add_option("--algorithm,-a", cfg.algorithm, "construction to apply")
      ->check(CLI::IsMember({"auto", "tree", "cycle", "bipartite", "complete", "complete-bipartite",
                             "complete-bipartite-partial", "general"}));
  colour->add_option("--pvc", cfg.pvc, "proper vertex colouring strategy")
      ->check(CLI::IsMember({"auto", "exact", "dsatur"}));
  colour->add_option("--vertex-ceiling", cfg.vertex_ceiling, "largest graph for exact vertex colouring");
  colour->add_option("--colouring-out", cfg.colouring_out, "also write the colouring file here");
  colour->add_option("--output,-o", output)->check(output_check);

  auto* verify_cmd = app.add_subcommand("verify", "check a colouring file against a graph");
  add_graph_input(verify_cmd, cfg);
  verify_cmd->add_option("--colouring,-c", cfg.colouring_path, "colouring file")->required();
  verify_cmd->add_option("--output,-o", output)->check(output_check);

  auto* exact = app.add_subcommand("exact", "exact conflict-free chromatic index by backtracking");
  add_graph_input(exact, cfg);
  exact->add_option("--mode,-m", cfg.mode, "full or subgraph")->check(CLI::IsMember({"full", "subgraph"}));
  exact->add_option("--edge-ceiling", cfg.edge_ceiling, "largest edge count accepted");
  exact->add_option("--output,-o", output)->check(output_check);

  auto* survey = app.add_subcommand("survey", "exhaustive surveys of small trees or bipartite graphs");
  survey->add_option("kind", cfg.survey_kind, "trees or bipartite")
      ->required()
      ->check(CLI::IsMember({"trees", "bipartite"}));
  survey->add_option("--max-n,-n", cfg.max_n, "largest order scanned")->required();
  survey->add_option("--workers,-w", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--edge-ceiling", cfg.edge_ceiling, "largest edge count accepted by the exact search");
  survey->add_option("--output,-o", output)->check(output_check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;

  try {
    if (colour->parsed()) {
      cfg.subcommand = "colour";
      return cmd_colour(cfg, out);
    }
    if (verify_cmd->parsed()) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, out);
    }
    if (exact->parsed()) {
      cfg.subcommand = "exact";
      return cmd_exact(cfg, out);
    }
    cfg.subcommand = "survey";
    return cmd_survey(cfg, out);
  } catch (const CeilingError& e) {
    err << "cfedge: " << e.what() << "\n";
    return kCeiling;
  } catch (const std::exception& e) {
    err << "cfedge: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cfedge::cli
