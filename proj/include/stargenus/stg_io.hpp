#pragma once
//
// Reader and writer for the line-oriented .stg text format:
//
//   stargraph <n_vertices> <n_edges>
//   vertex <id> <degree>          (one per vertex)
//   edge <id> <v>.<slot> <v>.<slot>  (one per edge)
//
// '#' starts a comment running to the end of the line; blank lines are ignored. Serialization emits
// vertices then edges in ascending id order.

#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stargenus/errors.hpp"
#include "stargenus/graph.hpp"

namespace stargenus {

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line, const char* what) {
  Int value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

inline HalfEdge parse_half_edge(std::string_view token, std::size_t line) {
  const auto dot = token.find('.');
  if (dot == std::string_view::npos) {
    throw ParseError(line, "expected <vertex>.<slot>, got '" + std::string(token) + "'");
  }
  HalfEdge h;
  h.vertex = parse_int<VertexId>(token.substr(0, dot), line, "vertex id");
  h.slot = parse_int<int>(token.substr(dot + 1), line, "slot");
  return h;
}

}  // namespace detail

/// Parses .stg text. Throws ParseError carrying the 1-based line number.
inline StarGraph parse_stg(std::istream& in) {
  StarGraph g;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool seen_edge = false;
  std::size_t want_vertices = 0;
  std::size_t want_edges = 0;
  std::size_t header_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = detail::split_tokens(std::string_view(raw).substr(0, raw.find('#')));
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0] != "stargraph" || tokens.size() != 3) {
        throw ParseError(line_no, "expected header 'stargraph <n_vertices> <n_edges>'");
      }
      want_vertices = detail::parse_int<std::size_t>(tokens[1], line_no, "vertex count");
      want_edges = detail::parse_int<std::size_t>(tokens[2], line_no, "edge count");
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (tokens[0] == "vertex") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'vertex <id> <degree>'");
      if (seen_edge) throw ParseError(line_no, "vertex declared after edges");
      const auto id = detail::parse_int<VertexId>(tokens[1], line_no, "vertex id");
      const auto degree = detail::parse_int<int>(tokens[2], line_no, "degree");
      if (degree <= 0) throw ParseError(line_no, "degree must be positive");
      if (g.has_vertex(id)) throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
      g.add_vertex(id, degree);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <id> <v>.<slot> <v>.<slot>'");
      seen_edge = true;
      const auto id = detail::parse_int<EdgeId>(tokens[1], line_no, "edge id");
      const HalfEdge a = detail::parse_half_edge(tokens[2], line_no);
      const HalfEdge b = detail::parse_half_edge(tokens[3], line_no);
      for (const HalfEdge& h : {a, b}) {
        if (!g.has_vertex(h.vertex)) {
          throw ParseError(line_no, "edge references undeclared vertex " + std::to_string(h.vertex));
        }
      }
      if (g.edges().count(id) != 0) throw ParseError(line_no, "duplicate edge id " + std::to_string(id));
      g.add_edge(id, a, b);
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tokens[0]) + "'");
    }
  }

  if (!have_header) throw ParseError(line_no + 1, "missing 'stargraph' header");
  if (g.vertex_count() != want_vertices || g.edge_count() != want_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(want_vertices) + " vertices and " +
                                      std::to_string(want_edges) + " edges, file has " +
                                      std::to_string(g.vertex_count()) + " and " +
                                      std::to_string(g.edge_count()));
  }
  return g;
}

inline StarGraph parse_stg(const std::string& text) {
  std::istringstream in(text);
  return parse_stg(in);
}

inline std::string to_stg(const StarGraph& g) {
  std::ostringstream out;
  out << "stargraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [v, d] : g.vertices()) out << "vertex " << v << ' ' << d << '\n';
  for (const auto& [id, e] : g.edges()) {
    out << "edge " << id << ' ' << to_string(e.a) << ' ' << to_string(e.b) << '\n';
  }
  return out.str();
}

}  // namespace stargenus
