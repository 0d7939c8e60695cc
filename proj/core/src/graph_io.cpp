#include "cfedge/graph_io.hpp"

#include <charconv>
#include <vector>

namespace cfedge {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr unsigned char kBias = 63;

void append_size(std::string& out, std::size_t n) {
  auto put6 = [&](std::size_t bits, int groups) {
    for (int k = groups - 1; k >= 0; --k) {
      out.push_back(static_cast<char>(((bits >> (6 * k)) & 0x3F) + kBias));
    }
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    put6(n, 3);
  } else if (n <= 68719476735ULL) {
    out.append("~~");
    put6(n, 6);
  } else {
    throw GraphError("graph too large for graph6");
  }
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  append_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  std::string_view body = text;
  if (body.ends_with('\n')) body.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> unsigned {
    if (i >= body.size()) throw ParseError("graph6: unexpected end of input", i);
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte out of range", i);
    return c - kBias;
  };

  std::size_t n = 0;
  if (pos >= body.size()) throw ParseError("graph6: missing size header", pos);
  if (body[pos] == '~') {
    int groups = 3;
    ++pos;
    if (pos < body.size() && body[pos] == '~') {
      groups = 6;
      ++pos;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | byte_at(pos++);
    if ((groups == 3 && n <= 62) || (groups == 6 && n <= 258047)) {
      throw ParseError("graph6: non-canonical size header", pos - 1);
    }
    if (n > 100000) throw ParseError("graph6: graph too large", pos - 1);
  } else {
    n = byte_at(pos++);
  }

  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) pairs.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = byte_at(pos + bytes - 1);
    const unsigned pad_mask = (1U << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  pos += bytes;
  if (pos != body.size()) throw ParseError("graph6: trailing garbage", pos);
  return Graph::from_edges(n, pairs);
}

namespace {

class EdgelistReader {
 public:
  explicit EdgelistReader(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::uint64_t number() {
    skip_blanks();
    std::uint64_t v = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == first) throw ParseError("edgelist: expected a decimal number", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  // End of a record: optional blanks, then LF or end of input.
  void end_of_line(bool allow_eof) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == '\n') {
      ++pos_;
      return;
    }
    if (allow_eof && at_end()) return;
    throw ParseError(at_end() ? "edgelist: unexpected end of input" : "edgelist: unexpected character", pos_);
  }

  void expect_only_blank_lines() {
    while (!at_end()) {
      skip_blanks();
      if (at_end()) break;
      if (text_[pos_] != '\n') throw ParseError("edgelist: trailing garbage", pos_);
      ++pos_;
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edgelist(std::string_view text) {
  EdgelistReader in(text);
  const auto n = in.number();
  const auto m = in.number();
  in.end_of_line(m == 0);
  if (n > 100000) throw ParseError("edgelist: vertex count too large", 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto line_start = in.pos();
    const auto a = in.number();
    const auto b = in.number();
    if (a >= n || b >= n) throw ParseError("edgelist: vertex out of range", line_start);
    in.end_of_line(i + 1 == m);
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  in.expect_only_blank_lines();
  return Graph::from_edges(n, pairs);
}

std::string emit_edgelist(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? emit_graph6(g) : emit_edgelist(g);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw GraphError("unknown graph format '" + std::string(name) + "'");
}

}  // namespace cfedge
