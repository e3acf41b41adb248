#pragma once

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/graph.hpp"

namespace distdet {

namespace detail {

inline bool parse_int(std::string_view tok, int& out) {
  const auto* begin = tok.data();
  const auto* end = tok.data() + tok.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

}  // namespace detail

/// Parses the edge-list text format:
///   - optional first line "n=<order>"
///   - one "u v" pair per line, vertices 0-based
///   - blank lines and lines starting with '#' are ignored
/// Without a header the order is 1 + the largest vertex index.
inline Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int declared_order = -1;
  bool saw_content = false;
  int max_vertex = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    if (!saw_content && sv.substr(0, 2) == "n=") {
      int order = 0;
      if (!detail::parse_int(sv.substr(2), order) || order < 1)
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed header '" + std::string(sv) + "'");
      declared_order = order;
      saw_content = true;
      continue;
    }
    saw_content = true;

    std::istringstream ls{std::string(sv)};
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two vertex indices");
    int u = 0, v = 0;
    if (!detail::parse_int(a, u) || !detail::parse_int(b, v) || u < 0 || v < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed vertex index");
    if (u == v)
      throw GraphError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(u));
    if (declared_order >= 0 && (u >= declared_order || v >= declared_order))
      throw GraphError("line " + std::to_string(line_no) + ": vertex " +
                       std::to_string(std::max(u, v)) +
                       " exceeds declared order " + std::to_string(declared_order));
    for (const auto& [eu, ev] : edges)
      if ((eu == u && ev == v) || (eu == v && ev == u))
        throw GraphError("line " + std::to_string(line_no) + ": duplicate edge " +
                         std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }

  const int order = declared_order >= 0 ? declared_order : max_vertex + 1;
  if (order < 1) throw ParseError("edge list describes no vertices");
  return Graph(order, std::move(edges));
}

/// Inverse of from_edge_list. The "n=" header is written only when the edges
/// alone would under-determine the order (isolated vertices), so the common
/// connected case round-trips as a bare list of "u v" lines.
inline std::string to_edge_list(const Graph& g) {
  int max_vertex = -1;
  for (const auto& [u, v] : g.edges()) max_vertex = std::max(max_vertex, v);
  std::ostringstream os;
  if (max_vertex + 1 != g.order()) os << "n=" << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

/// Graphviz DOT rendering (undirected, default styling).
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace distdet
