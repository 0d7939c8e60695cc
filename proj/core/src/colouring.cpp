#include "cfedge/colouring.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>

namespace cfedge {

EdgeColouring EdgeColouring::full(std::initializer_list<Colour> colours) {
  std::vector<std::optional<Colour>> a(colours.begin(), colours.end());
  return EdgeColouring(std::move(a));
}

std::size_t EdgeColouring::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(assignment_.begin(), assignment_.end(), [](const auto& x) { return x.has_value(); }));
}

std::size_t EdgeColouring::colours_used() const {
  std::set<Colour> seen;
  for (const auto& x : assignment_) {
    if (x) seen.insert(*x);
  }
  return seen.size();
}

std::optional<Colour> EdgeColouring::max_colour() const {
  std::optional<Colour> best;
  for (const auto& x : assignment_) {
    if (x && (!best || *x > *best)) best = x;
  }
  return best;
}

std::size_t Palette::count(Colour c) const {
  const auto it = counts_.find(c);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t Palette::total() const {
  std::size_t t = 0;
  for (const auto& [colour, m] : counts_) t += m;
  return t;
}

bool Palette::has_unique() const {
  return std::any_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::string Palette::to_string() const {
  if (counts_.empty()) return "{}";
  std::string out;
  for (const auto& [colour, m] : counts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(colour);
    if (m != 1) out += '^' + std::to_string(m);
  }
  return out;
}

Palette edge_palette(const Graph& g, const EdgeColouring& c, EdgeId e) {
  Palette p;
  const Edge& uv = g.edge(e);
  for (const auto& inc : g.incident(uv.u)) {
    if (c[inc.edge]) p.add(*c[inc.edge]);
  }
  for (const auto& inc : g.incident(uv.v)) {
    if (inc.edge != e && c[inc.edge]) p.add(*c[inc.edge]);
  }
  return p;
}

Palette vertex_palette(const Graph& g, const EdgeColouring& c, Vertex v) {
  Palette p;
  for (const auto& inc : g.incident(v)) {
    if (c[inc.edge]) p.add(*c[inc.edge]);
  }
  return p;
}

bool is_edge_satisfied(const Graph& g, const EdgeColouring& c, EdgeId e) {
  return edge_palette(g, c, e).has_unique();
}

bool is_vertex_satisfied(const Graph& g, const EdgeColouring& c, Vertex v) {
  return vertex_palette(g, c, v).has_unique();
}

namespace {

void require_matching(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count()) {
    throw ColouringError("colouring has " + std::to_string(c.size()) + " entries but the graph has " +
                         std::to_string(g.edge_count()) + " edges");
  }
}

}  // namespace

VerificationReport verify(const Graph& g, const EdgeColouring& c) {
  require_matching(g, c);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw ColouringError("isolated vertex " + std::to_string(v));
  }
  VerificationReport report;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Palette p = edge_palette(g, c, e);
    if (!p.has_unique()) report.unsatisfied_edges.push_back({e, std::move(p)});
  }
  report.satisfied = report.unsatisfied_edges.empty();
  report.colours_used = c.colours_used();
  return report;
}

EdgeColouring complete_with_fresh_colour(const Graph& g, const EdgeColouring& c) {
  require_matching(g, c);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& uv = g.edge(e);
    if (g.degree(uv.u) == 1 && g.degree(uv.v) == 1) {
      throw ColouringError("completion needs a graph without isolated edges; edge " + std::to_string(e) + " " +
                           describe_pair(uv.u, uv.v) + " is isolated");
    }
  }
  if (!verify(g, c).satisfied) throw ColouringError("completion needs a satisfying colouring");
  if (c.fully_assigned()) return c;
  const auto top = c.max_colour();
  const Colour fresh = top ? *top + 1 : 0;
  EdgeColouring out = c;
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (!out[e]) out.assign(e, fresh);
  }
  return out;
}

EdgeColouring normalize_colours(const EdgeColouring& c) {
  std::unordered_map<Colour, Colour> relabel;
  EdgeColouring out(c.size());
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (!c[e]) continue;
    const auto [it, inserted] = relabel.try_emplace(*c[e], static_cast<Colour>(relabel.size()));
    out.assign(e, it->second);
  }
  return out;
}

std::string write_colouring(const EdgeColouring& c) {
  std::string out = std::to_string(c.size()) + " " + std::to_string(c.colours_used()) + "\n";
  for (EdgeId e = 0; e < c.size(); ++e) {
    out += std::to_string(e) + " " + (c[e] ? std::to_string(*c[e]) : std::string("-")) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!line.starts_with('#')) lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::uint64_t to_number(std::string_view token, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ColouringError("colouring file line " + std::to_string(line) + ": bad number '" + std::string(token) +
                         "'");
  }
  return v;
}

std::pair<std::string_view, std::string_view> two_tokens(std::string_view s, std::size_t line) {
  const auto sp = s.find(' ');
  if (sp == std::string_view::npos || s.find(' ', sp + 1) != std::string_view::npos) {
    throw ColouringError("colouring file line " + std::to_string(line) + ": expected two fields");
  }
  return {s.substr(0, sp), s.substr(sp + 1)};
}

}  // namespace

EdgeColouring read_colouring(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ColouringError("colouring file is empty");
  const auto [m_tok, k_tok] = two_tokens(lines[0], 1);
  const auto m = to_number(m_tok, 1);
  const auto k = to_number(k_tok, 1);
  if (lines.size() != m + 1) {
    throw ColouringError("colouring file declares " + std::to_string(m) + " edges but has " +
                         std::to_string(lines.size() - 1) + " entries");
  }
  EdgeColouring c(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [id_tok, colour_tok] = two_tokens(lines[i], i + 1);
    const auto id = to_number(id_tok, i + 1);
    if (id != i - 1) throw ColouringError("colouring file line " + std::to_string(i + 1) + ": edge ids must be 0..m-1 in order");
    if (colour_tok != "-") c.assign(static_cast<EdgeId>(id), static_cast<Colour>(to_number(colour_tok, i + 1)));
  }
  if (c.colours_used() != k) {
    throw ColouringError("colouring file declares " + std::to_string(k) + " colours but uses " +
                         std::to_string(c.colours_used()));
  }
  return c;
}

}  // namespace cfedge
