#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "distdet/determinant.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"
#include "distdet/transforms.hpp"

using namespace distdet;

TEST_CASE("pendant attachment") {
  const Graph paw = attach_pendant(generate_cycle(3), 0);
  REQUIRE(paw.order() == 4);
  REQUIRE(paw.edge_count() == 4);
  REQUIRE(paw.degree(0) == 3);
  REQUIRE(paw.degree(3) == 1);

  REQUIRE_THROWS_AS(attach_pendant(generate_cycle(3), 3), DomainError);
  REQUIRE_THROWS_AS(attach_pendant(generate_cycle(3), -1), DomainError);
}

TEST_CASE("pendant attachment point never changes the determinant") {
  const Graph c5 = generate_cycle(5);
  const BigInt expected =
      det_bareiss(distance_matrix(attach_pendant(c5, 0)));
  for (int v = 1; v < 5; ++v)
    REQUIRE(det_bareiss(distance_matrix(attach_pendant(c5, v))) == expected);

  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 2 + static_cast<int>(uniform_below(rng, 9));
    const Graph g = random_connected_graph(
        order, static_cast<int>(uniform_below(rng, order)), rng);
    const BigInt base = det_bareiss(distance_matrix(attach_pendant(g, 0)));
    for (int v = 1; v < order; ++v)
      REQUIRE(det_bareiss(distance_matrix(attach_pendant(g, v))) == base);
  }
}

TEST_CASE("joining constructions") {
  const JoinSpec triangles{generate_cycle(3), 2, generate_cycle(3), 0};
  REQUIRE(edge_join(triangles) == generate_infinity(3, 2, 3));
  REQUIRE(identify_plus_pendant(triangles) == generate_gpqn(3, 3, 1));

  const JoinSpec dots{single_vertex(), 0, single_vertex(), 0};
  REQUIRE(edge_join(dots) == generate_path(2));

  const JoinSpec big{generate_cycle(5), 4, generate_cycle(7), 0};
  REQUIRE(edge_join(big) == generate_infinity(5, 2, 7));

  REQUIRE(edge_join(triangles).order() ==
          identify_plus_pendant(triangles).order());

  REQUIRE_THROWS_AS(edge_join(JoinSpec{generate_cycle(3), 5,
                                       generate_cycle(3), 0}),
                    DomainError);
  REQUIRE_THROWS_AS(edge_join(JoinSpec{Graph(2, {}), 0, single_vertex(), 0}),
                    GraphError);
}

TEST_CASE("the two joining constructions share a determinant") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int lo = 1 + static_cast<int>(uniform_below(rng, 8));
    const int ro = 1 + static_cast<int>(uniform_below(rng, 8));
    const JoinSpec spec{
        random_connected_graph(lo, static_cast<int>(uniform_below(rng, lo)),
                               rng),
        static_cast<int>(uniform_below(rng, lo)),
        random_connected_graph(ro, static_cast<int>(uniform_below(rng, ro)),
                               rng),
        static_cast<int>(uniform_below(rng, ro))};
    REQUIRE(det_bareiss(distance_matrix(edge_join(spec))) ==
            det_bareiss(distance_matrix(identify_plus_pendant(spec))));
  }
}

TEST_CASE("normalization to the pendant-path representative") {
  const Graph g332 = generate_gpqn(3, 3, 2);
  REQUIRE(normal_form(g332) == g332);

  REQUIRE(normal_form(generate_infinity(3, 3, 3)) == generate_gpqn(3, 3, 2));

  const Graph planted =
      plant_random_trees(generate_infinity(5, 2, 7), 8, std::uint64_t{99});
  REQUIRE(planted.order() == 20);
  REQUIRE(normal_form(planted) == generate_gpqn(5, 7, 9));
  REQUIRE(det_bareiss(distance_matrix(planted)) ==
          det_bareiss(distance_matrix(normal_form(planted))));

  REQUIRE(normal_form(normal_form(planted)) == normal_form(planted));

  REQUIRE_THROWS_AS(normal_form(generate_cycle(4)), GraphError);
}

TEST_CASE("normalization preserves the determinant on random instances") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int p = 3 + static_cast<int>(uniform_below(rng, 5));
    const int q = 3 + static_cast<int>(uniform_below(rng, 5));
    const int k = 1 + static_cast<int>(uniform_below(rng, 4));
    const int extra = static_cast<int>(uniform_below(rng, 8));
    const Graph g =
        plant_random_trees(generate_infinity(p, k, q), extra, rng);
    REQUIRE(det_bareiss(distance_matrix(g)) ==
            det_bareiss(distance_matrix(normal_form(g))));
  }
}
