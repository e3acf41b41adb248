#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/matrix.hpp"
#include "distdet/numeric.hpp"

namespace distdet {

/// Simple undirected graph on vertices 0..order-1. Immutable after
/// construction; the constructor rejects self-loops, duplicate edges and
/// out-of-range endpoints. Edges are stored normalized (u < v, sorted).
class Graph {
 public:
  Graph(int order, std::vector<std::pair<int, int>> edges)
      : order_(order), edges_(std::move(edges)) {
    if (order_ < 1) throw DomainError("Graph: order must be positive");
    for (auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw GraphError("Graph: edge endpoint out of range: " +
                         std::to_string(u) + " " + std::to_string(v));
      if (u == v)
        throw GraphError("Graph: self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw GraphError("Graph: duplicate edge");
    adj_.resize(order_);
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Labeled equality: same order and same edge set.
  bool operator==(const Graph& o) const {
    return order_ == o.order_ && edges_ == o.edges_;
  }

 private:
  int order_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// BFS distances from source; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    throw DomainError("bfs_distances: source out of range");
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

/// Throws GraphError naming two vertices in different components.
inline void require_connected(const Graph& g, const char* what) {
  const auto d = bfs_distances(g, 0);
  const auto it = std::find(d.begin(), d.end(), -1);
  if (it != d.end())
    throw GraphError(std::string(what) + ": graph is disconnected, vertices 0 and " +
                     std::to_string(it - d.begin()) +
                     " are in different components");
}

/// Shortest-path distance matrix of a connected graph: symmetric, zero
/// diagonal, entries bounded by order-1.
inline IntMatrix distance_matrix(const Graph& g) {
  require_connected(g, "distance_matrix");
  const int n = g.order();
  IntMatrix d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto row = bfs_distances(g, i);
    for (int j = 0; j < n; ++j) d(i, j) = row[j];
  }
  return d;
}

/// Relabels vertices: vertex v becomes perm[v]. perm must be a permutation
/// of 0..order-1.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw DomainError("relabel: permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p])
      throw DomainError("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), std::move(edges));
}

}  // namespace distdet
