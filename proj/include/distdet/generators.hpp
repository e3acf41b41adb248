#pragma once

#include <utility>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/graph.hpp"
#include "distdet/numeric.hpp"

namespace distdet {

inline Graph single_vertex() { return Graph(1, {}); }

/// Path on n vertices (n-1 edges), vertices 0-1-...-(n-1).
inline Graph generate_path(int n) {
  if (n < 1) throw DomainError("generate_path: need at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

/// Cycle 0-1-...-(p-1)-0.
inline Graph generate_cycle(int p) {
  if (p < 3) throw DomainError("generate_cycle: cycle length must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  return Graph(p, std::move(edges));
}

/// Two cycles of lengths p and q joined by a path with k-1 edges; k = 1
/// means the cycles share exactly one vertex. Order p+q+k-2, size order+1.
///
/// Labeling: first cycle 0..p-1; the join vertex on it is p-1; the
/// connecting path continues with new vertices p, p+1, ...; the second
/// cycle closes through the path's far end.
inline Graph generate_infinity(int p, int k, int q) {
  if (p < 3 || q < 3)
    throw DomainError("generate_infinity: cycle lengths must be >= 3");
  if (k < 1) throw DomainError("generate_infinity: path parameter must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  int join = p - 1;
  int next = p;
  for (int i = 0; i < k - 1; ++i) {
    edges.emplace_back(join, next);
    join = next++;
  }
  int prev = join;
  for (int i = 0; i < q - 1; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, join);
  return Graph(next, std::move(edges));
}

/// generate_infinity(p, 1, q) with a pendant path of n edges planted on the
/// shared (degree-4) center vertex. Order p+q-1+n; n = 0 gives the plain
/// two-cycle graph.
inline Graph generate_gpqn(int p, int q, int n) {
  if (n < 0) throw DomainError("generate_gpqn: path length must be >= 0");
  const Graph base = generate_infinity(p, 1, q);
  auto edges = base.edges();
  int tail = p - 1;  // the center vertex
  int next = base.order();
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(tail, next);
    tail = next++;
  }
  return Graph(next, std::move(edges));
}

/// Adds `extra` vertices one at a time, each joined by a single edge to a
/// uniformly random existing vertex. Preserves the cycle structure of the
/// base; any tree shape can arise.
inline Graph plant_random_trees(const Graph& base, int extra, Rng& rng) {
  if (extra < 0) throw DomainError("plant_random_trees: extra must be >= 0");
  require_connected(base, "plant_random_trees");
  auto edges = base.edges();
  int order = base.order();
  for (int i = 0; i < extra; ++i) {
    const int target = static_cast<int>(uniform_below(rng, order));
    edges.emplace_back(target, order);
    ++order;
  }
  return Graph(order, std::move(edges));
}

inline Graph plant_random_trees(const Graph& base, int extra, std::uint64_t seed) {
  Rng rng(seed);
  return plant_random_trees(base, extra, rng);
}

///// Random connected graph: a random tree grown by sequential attachment,
/// plus up to `extra_edges` distinct random non-tree edges.
inline Graph random_connected_graph(int order, int extra_edges, Rng& rng) {
  if (order < 1) throw DomainError("random_connected_graph: order must be >= 1");
  if (extra_edges < 0)
    throw DomainError("random_connected_graph: extra_edges must be >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < order; ++v)
    edges.emplace_back(static_cast<int>(uniform_below(rng, v)), v);

  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) candidates.emplace_back(u, v);
  for (const auto& [u, v] : edges)
    std::erase(candidates, std::make_pair(std::min(u, v), std::max(u, v)));

  for (int i = 0; i < extra_edges && !candidates.empty(); ++i) {
    const auto idx = uniform_below(rng, candidates.size());
    edges.push_back(candidates[idx]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Graph(order, std::move(edges));
}

}  // namespace distdet
