#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/graph.hpp"

namespace distdet {

/// Parameters of a bicyclic graph whose two cycles are edge-disjoint:
/// cycle lengths p <= q, connecting-path parameter k (k = 1 means the
/// cycles share one vertex), and tree mass n = order - (p+q-1).
struct BicyclicShape {
  int p;
  int q;
  int k;
  int n;

  int order() const { return p + q - 1 + n; }
  bool operator==(const BicyclicShape&) const = default;
};

/// Vertices surviving iterated leaf deletion (the 2-core), ascending.
inline std::vector<int> two_core_vertices(const Graph& g) {
  std::vector<int> deg(g.order());
  std::vector<bool> alive(g.order(), true);
  std::vector<int> stack;
  for (int v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (int u : g.neighbors(v))
      if (alive[u] && --deg[u] <= 1) stack.push_back(u);
  }
  std::vector<int> core;
  for (int v = 0; v < g.order(); ++v)
    if (alive[v]) core.push_back(v);
  return core;
}

namespace detail {

// Per-component attachment profile of the base with its branch vertices
// deleted: component size and how many edges it sends to each branch vertex.
struct Attachment {
  int size = 0;
  int to_first = 0;
  int to_second = 0;
};

inline std::vector<Attachment> base_components(const Graph& g,
                                               const std::vector<int>& core,
                                               int hub_a, int hub_b) {
  std::vector<bool> in_core(g.order(), false);
  for (int v : core) in_core[v] = true;
  std::vector<int> comp(g.order(), -1);
  std::vector<Attachment> out;
  for (int start : core) {
    if (start == hub_a || start == hub_b || comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++out[id].size;
      for (int u : g.neighbors(v)) {
        if (!in_core[u]) continue;
        if (u == hub_a)
          ++out[id].to_first;
        else if (u == hub_b)
          ++out[id].to_second;
        else if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Determines the shape (p, q, k, n) of a bicyclic graph with edge-disjoint
/// cycles. Strips leaves to expose the base, then reads the shape off the
/// base's branch vertices: one degree-4 vertex means the cycles share it
/// (k = 1); two degree-3 vertices are either the endpoints of a connecting
/// path (k >= 2) or the hubs of a theta graph, which is rejected.
inline BicyclicShape classify_bicyclic(const Graph& g) {
  require_connected(g, "classify_bicyclic");
  if (g.edge_count() != g.order() + 1)
    throw GraphError("classify_bicyclic: not bicyclic (order " +
                     std::to_string(g.order()) + ", size " +
                     std::to_string(g.edge_count()) + ")");

  const auto core = two_core_vertices(g);
  std::vector<bool> in_core(g.order(), false);
  for (int v : core) in_core[v] = true;
  auto core_degree = [&](int v) {
    int d = 0;
    for (int u : g.neighbors(v)) d += in_core[u];
    return d;
  };

  std::vector<int> hubs;
  for (int v : core)
    if (core_degree(v) > 2) hubs.push_back(v);

  int p = 0, q = 0, k = 0;
  if (hubs.size() == 1 && core_degree(hubs[0]) == 4) {
    // Two cycles glued at the hub; deleting it leaves one path per cycle.
    const auto comps = detail::base_components(g, core, hubs[0], -1);
    if (comps.size() != 2)
      throw GraphError("classify_bicyclic: unrecognized base");
    p = comps[0].size + 1;
    q = comps[1].size + 1;
    k = 1;
  } else if (hubs.size() == 2 && core_degree(hubs[0]) == 3 &&
             core_degree(hubs[1]) == 3) {
    const bool adjacent = g.has_edge(hubs[0], hubs[1]);
    const auto comps = detail::base_components(g, core, hubs[0], hubs[1]);
    int arc_first = -1, arc_second = -1, connector = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& c = comps[i];
      if (c.to_first == 2 && c.to_second == 0)
        arc_first = static_cast<int>(i);
      else if (c.to_first == 0 && c.to_second == 2)
        arc_second = static_cast<int>(i);
      else if (c.to_first == 1 && c.to_second == 1)
        connector = static_cast<int>(i);
    }
    const std::size_t expected = adjacent ? 2 : 3;
    if (comps.size() != expected)
      throw GraphError("classify_bicyclic: unrecognized base");
    if (arc_first < 0 || arc_second < 0 || (!adjacent && connector < 0))
      throw GraphError(
          "classify_bicyclic: cycles not disjoint (theta-shaped base)");
    p = comps[arc_first].size + 1;
    q = comps[arc_second].size + 1;
    k = adjacent ? 2 : comps[connector].size + 2;
  } else {
    throw GraphError("classify_bicyclic: unrecognized base");
  }

  if (p > q) std::swap(p, q);
  return BicyclicShape{p, q, k, g.order() - (p + q - 1)};
}

}  // namespace distdet
