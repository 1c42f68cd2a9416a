#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "palette.hpp"

namespace tricolor {

// Malformed input, with a 1-based position.
class ParseError : public InputError {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &what)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                   what),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column; // 1-based
};

inline std::vector<Token> split_line(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
      ++j;
    if (j > i)
      out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

inline std::size_t read_count(const Token &t, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw ParseError(line, t.column,
                     "expected a non-negative integer, got '" +
                         std::string(t.text) + "'");
  return v;
}

} // namespace detail

// DIMACS edge format: `c` comment lines, one `p edge <n> <m>` header, then
// exactly m lines `e <u> <v>` with 1 <= u, v <= n. Blank lines are allowed.
inline Graph read_dimacs(std::istream &in) {
  std::string raw;
  std::size_t line = 0, n = 0, m = 0;
  bool header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = detail::split_line(raw);
    if (tok.empty() || tok[0].text == "c")
      continue;
    if (tok[0].text == "p") {
      if (header)
        throw ParseError(line, tok[0].column, "second header line");
      if (tok.size() != 4 || tok[1].text != "edge")
        throw ParseError(line, tok[0].column,
                         "header must read 'p edge <n> <m>'");
      n = detail::read_count(tok[2], line);
      m = detail::read_count(tok[3], line);
      header = true;
      continue;
    }
    if (tok[0].text == "e") {
      if (!header)
        throw ParseError(line, tok[0].column, "edge before the header");
      if (tok.size() != 3)
        throw ParseError(line, tok[0].column, "edge line must read 'e <u> <v>'");
      std::size_t u = detail::read_count(tok[1], line);
      std::size_t v = detail::read_count(tok[2], line);
      for (auto [x, t] : {std::pair{u, tok[1]}, std::pair{v, tok[2]}})
        if (x < 1 || x > n)
          throw ParseError(line, t.column,
                           "vertex " + std::to_string(x) + " outside 1.." +
                               std::to_string(n));
      if (u == v)
        throw ParseError(line, tok[1].column, "self-loop");
      Edge e{static_cast<Vertex>(std::min(u, v) - 1),
             static_cast<Vertex>(std::max(u, v) - 1)};
      if (!seen.insert(e).second)
        throw ParseError(line, tok[0].column, "duplicate edge");
      edges.push_back(e);
      continue;
    }
    throw ParseError(line, tok[0].column,
                     "unknown line type '" + std::string(tok[0].text) + "'");
  }
  if (!header)
    throw ParseError(line + 1, 1, "missing 'p edge' header");
  if (edges.size() != m)
    throw ParseError(line + 1, 1,
                     "header announces " + std::to_string(m) +
                         " edges, file has " + std::to_string(edges.size()));
  return build_graph(n, edges);
}

inline Graph read_dimacs_string(const std::string &s) {
  std::istringstream in(s);
  return read_dimacs(in);
}

inline Graph read_dimacs_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return read_dimacs(in);
}

// Vertices are renumbered 1..order in increasing id order.
inline void write_dimacs(std::ostream &out, const Graph &g,
                         const std::string &comment = {}) {
  std::vector<Vertex> ids = g.vertices().to_vector();
  std::vector<std::size_t> pos(g.universe(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i)
    pos[ids[i]] = i + 1;
  auto edges = g.edges();
  if (!comment.empty())
    out << "c " << comment << '\n';
  out << "p edge " << ids.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges)
    out << "e " << pos[u] << ' ' << pos[v] << '\n';
}

inline std::string to_dimacs(const Graph &g, const std::string &comment = {}) {
  std::ostringstream out;
  write_dimacs(out, g, comment);
  return out.str();
}

// `v <vertex> <color>` per vertex, 1-based.
inline void write_coloring(std::ostream &out, const Graph &g,
                           const Coloring &c) {
  for (Vertex v : g.vertices())
    out << "v " << v + 1 << ' ' << static_cast<int>(c[v]) << '\n';
}

inline Coloring read_coloring(std::istream &in, std::size_t n) {
  Coloring c(n);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = detail::split_line(raw);
    if (tok.empty() || tok[0].text == "c")
      continue;
    if (tok[0].text != "v" || tok.size() != 3)
      throw ParseError(line, tok[0].column,
                       "coloring line must read 'v <vertex> <color>'");
    std::size_t v = detail::read_count(tok[1], line);
    std::size_t col = detail::read_count(tok[2], line);
    if (v < 1 || v > n)
      throw ParseError(line, tok[1].column, "vertex out of range");
    if (col < 1 || col > 3)
      throw ParseError(line, tok[2].column, "color must be 1, 2 or 3");
    if (c[static_cast<Vertex>(v - 1)] != 0)
      throw ParseError(line, tok[1].column, "vertex colored twice");
    c[static_cast<Vertex>(v - 1)] = static_cast<Color>(col);
  }
  return c;
}

} // namespace tricolor
