#include "bootperc/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two integers, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    std::uint64_t a = parse_count(tokens[0], line_no);
    std::uint64_t b = parse_count(tokens[1], line_no);
    if (!have_header) {
      if (a > std::numeric_limits<VertexId>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more than the declared " + std::to_string(m) +
                                    " edges");
    }
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex index >= n = " + std::to_string(n));
    }
    if (a == b) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    }
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph from_edge_list(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_edge_list(buffer.str());
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return from_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges());
  for (const Edge& e : g.edges()) {
    out += '\n';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

}  // namespace bootperc
