#pragma once

#include <string>
#include <utility>
#include <vector>

#include "distdet/classify.hpp"
#include "distdet/error.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"

namespace distdet {

/// g plus one new vertex joined to v. The new vertex takes the next free
/// index. Attaching a pendant anywhere on a connected graph leaves the
/// distance-matrix determinant unchanged, which the suites verify.
inline Graph attach_pendant(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw DomainError("attach_pendant: vertex out of range");
  auto edges = g.edges();
  edges.emplace_back(v, g.order());
  return Graph(g.order() + 1, std::move(edges));
}

/// Two connected graphs and one chosen vertex on each; input to the two
/// equivalent joining constructions below.
struct JoinSpec {
  Graph left;
  int left_vertex;
  Graph right;
  int right_vertex;
};

namespace detail {

inline void validate(const JoinSpec& spec) {
  if (spec.left_vertex < 0 || spec.left_vertex >= spec.left.order())
    throw DomainError("JoinSpec: left vertex out of range");
  if (spec.right_vertex < 0 || spec.right_vertex >= spec.right.order())
    throw DomainError("JoinSpec: right vertex out of range");
  require_connected(spec.left, "JoinSpec left graph");
  require_connected(spec.right, "JoinSpec right graph");
}

}  // namespace detail

/// Disjoint union of the two graphs plus a bridge between the chosen
/// vertices. Right-hand vertices are shifted by |left|.
inline Graph edge_join(const JoinSpec& spec) {
  detail::validate(spec);
  const int shift = spec.left.order();
  auto edges = spec.left.edges();
  for (const auto& [u, v] : spec.right.edges())
    edges.emplace_back(u + shift, v + shift);
  edges.emplace_back(spec.left_vertex, spec.right_vertex + shift);
  return Graph(spec.left.order() + spec.right.order(), std::move(edges));
}

/// Glues the chosen vertices into one and hangs a new pendant vertex on the
/// glued vertex. Same order as edge_join and, for every spec, the same
/// distance-matrix determinant. Remaining right-hand vertices keep their
/// relative order, renumbered from |left|.
inline Graph identify_plus_pendant(const JoinSpec& spec) {
  detail::validate(spec);
  const int left_order = spec.left.order();
  std::vector<int> map(spec.right.order());
  int next = left_order;
  for (int v = 0; v < spec.right.order(); ++v)
    map[v] = (v == spec.right_vertex) ? spec.left_vertex : next++;

  auto edges = spec.left.edges();
  for (const auto& [u, v] : spec.right.edges())
    edges.emplace_back(map[u], map[v]);
  const int pendant = left_order + spec.right.order() - 1;
  edges.emplace_back(spec.left_vertex, pendant);
  return Graph(pendant + 1, std::move(edges));
}

/// Canonical representative with the same distance-matrix determinant:
/// the classified shape (p, q, n) rebuilt as two cycles sharing a vertex
/// with a pendant path of n edges. Classification errors propagate.
inline Graph normal_form(const Graph& g) {
  const BicyclicShape shape = classify_bicyclic(g);
  return generate_gpqn(shape.p, shape.q, shape.n);
}

}  // namespace distdet
