#include "edgering/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>

#include "edgering/errors.hpp"

namespace edgering {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_integer(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(ParseErrorKind::kMalformed, line_no, "not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

std::pair<long long, long long> two_integers(std::string_view line, std::size_t line_no) {
  auto toks = tokens(line);
  if (toks.size() != 2) throw ParseError(ParseErrorKind::kMalformed, line_no, "expected two integers");
  return {to_integer(toks[0], line_no), to_integer(toks[1], line_no)};
}

bool blank(std::string_view line) { return tokens(line).empty(); }

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || blank(lines[0])) throw ParseError(ParseErrorKind::kMalformed, 1, "missing header 'd n'");
  auto [d, n] = two_integers(lines[0], 1);
  if (d > kMaxVertices) throw ParseError(ParseErrorKind::kTooManyVertices, 1, "d = " + std::to_string(d) + " exceeds 64");
  if (d < 1) throw ParseError(ParseErrorKind::kMalformed, 1, "vertex count must be positive");
  if (n < 0) throw ParseError(ParseErrorKind::kMalformed, 1, "negative edge count");
  if (static_cast<std::size_t>(n) + 1 > lines.size()) {
    throw ParseError(ParseErrorKind::kMalformed, lines.size() + 1, "expected " + std::to_string(n) + " edge lines");
  }

  std::vector<Edge> edges;
  std::vector<VertexSet> adj(static_cast<std::size_t>(d));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
    const std::size_t line_no = k + 1;
    auto [i, j] = two_integers(lines[k], line_no);
    if (i < 1 || i > d || j < 1 || j > d) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                       std::to_string(i) + " " + std::to_string(j) + " not within 1.." + std::to_string(d));
    }
    if (i == j) throw ParseError(ParseErrorKind::kLoop, line_no, "at vertex " + std::to_string(i));
    int u = static_cast<int>(i - 1), v = static_cast<int>(j - 1);
    if (adj[u].contains(v)) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no, std::to_string(i) + " " + std::to_string(j));
    }
    adj[u].insert(v);
    adj[v].insert(u);
    edges.push_back({u, v});
  }
  for (std::size_t k = static_cast<std::size_t>(n) + 1; k < lines.size(); ++k) {
    if (!blank(lines[k])) throw ParseError(ParseErrorKind::kMalformed, k + 1, "unexpected content after edge list");
  }
  return Graph(static_cast<int>(d), edges);
}

Graph parse_edge_list(std::istream& in) { return parse_edge_list(slurp(in)); }

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (Edge e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph parse_graph6_line(std::string_view line, std::size_t line_no) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  for (char c : line) {
    if (c < 63 || c > 126) {
      throw ParseError(ParseErrorKind::kInvalidGraph6Byte, line_no, "byte " + std::to_string(static_cast<int>(c)));
    }
  }
  if (line.empty()) throw ParseError(ParseErrorKind::kMalformed, line_no, "empty graph6 record");

  std::size_t pos = 0;
  long long d = 0;
  if (line[0] != 126) {
    d = line[0] - 63;
    pos = 1;
  } else {
    const bool wide = line.size() > 1 && line[1] == 126;
    const std::size_t start = wide ? 2 : 1;
    const std::size_t count = wide ? 6 : 3;
    if (line.size() < start + count) throw ParseError(ParseErrorKind::kMalformed, line_no, "truncated vertex count");
    for (std::size_t k = 0; k < count; ++k) d = (d << 6) | (line[start + k] - 63);
    pos = start + count;
  }
  if (d > kMaxVertices) throw ParseError(ParseErrorKind::kTooManyVertices, line_no, "d = " + std::to_string(d) + " exceeds 64");
  if (d < 1) throw ParseError(ParseErrorKind::kMalformed, line_no, "graph has no vertices");

  const std::size_t bits = static_cast<std::size_t>(d * (d - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError(ParseErrorKind::kMalformed, line_no,
                     "expected " + std::to_string(bytes) + " adjacency bytes, got " + std::to_string(line.size() - pos));
  }
  auto bit = [&](std::size_t k) { return ((line[pos + k / 6] - 63) >> (5 - k % 6)) & 1; };
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < d; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.push_back({i, j});
  for (; k < bytes * 6; ++k)
    if (bit(k)) throw ParseError(ParseErrorKind::kMalformed, line_no, "nonzero padding bits");
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return Graph(static_cast<int>(d), edges);
}

std::vector<Graph> parse_graph6(std::string_view text) {
  std::vector<Graph> out;
  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (blank(lines[k])) continue;
    out.push_back(parse_graph6_line(lines[k], k + 1));
  }
  return out;
}

std::vector<Graph> parse_graph6(std::istream& in) { return parse_graph6(slurp(in)); }

std::string serialize_graph6(const Graph& g) {
  const int d = g.order();
  std::string out;
  if (d <= 62) {
    out += static_cast<char>(d + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((d >> shift) & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < d; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace edgering
