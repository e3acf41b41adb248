#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "distdet/determinant.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"

using namespace distdet;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = static_cast<long long>(uniform_below(rng, 19)) - 9;
  return m;
}

}  // namespace

TEST_CASE("fraction-free determinant on small fixed matrices") {
  IntMatrix swap2(2);
  swap2(0, 1) = 1;
  swap2(1, 0) = 1;
  REQUIRE(det_bareiss(swap2) == -1);

  REQUIRE(det_bareiss(distance_matrix(generate_cycle(3))) == 2);
  REQUIRE(det_bareiss(distance_matrix(generate_infinity(3, 1, 3))) == 12);

  IntMatrix one(1);
  one(0, 0) = -5;
  REQUIRE(det_bareiss(one) == -5);

  REQUIRE(det_bareiss(IntMatrix::identity(6)) == 1);
  REQUIRE(det_bareiss(IntMatrix(4)) == 0);
}

TEST_CASE("fraction-free determinant handles zero pivots") {
  // Leading principal minors vanish, forcing row swaps.
  IntMatrix m(3);
  m(0, 0) = 0; m(0, 1) = 0; m(0, 2) = 1;
  m(1, 0) = 0; m(1, 1) = 2; m(1, 2) = 0;
  m(2, 0) = 3; m(2, 1) = 0; m(2, 2) = 0;
  REQUIRE(det_bareiss(m) == -6);
  REQUIRE(det_naive(m) == -6);
}

TEST_CASE("cofactor determinant on small fixed matrices") {
  REQUIRE(det_naive(IntMatrix::identity(3)) == 1);
  IntMatrix swap2(2);
  swap2(0, 1) = 1;
  swap2(1, 0) = 1;
  REQUIRE(det_naive(swap2) == -1);
}

TEST_CASE("cofactor determinant dimension guard") {
  REQUIRE_NOTHROW(det_naive(IntMatrix::identity(12)));
  REQUIRE_THROWS_AS(det_naive(IntMatrix::identity(13)), DomainError);
}

TEST_CASE("determinants require square matrices") {
  REQUIRE_THROWS_AS(det_bareiss(IntMatrix(2, 3)), DomainError);
  REQUIRE_THROWS_AS(det_naive(IntMatrix(2, 3)), DomainError);
  REQUIRE_THROWS_AS(det_rational(RationalMatrix(2, 3)), DomainError);
}

TEST_CASE("the two integer kernels agree on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + uniform_below(rng, 7);
    const IntMatrix m = random_matrix(rng, dim);
    REQUIRE(det_bareiss(m) == det_naive(m));
  }
}

TEST_CASE("rational determinant agrees with the integer kernels") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + uniform_below(rng, 6);
    const IntMatrix m = random_matrix(rng, dim);
    REQUIRE(det_rational(to_rational(m)) == Rational(det_bareiss(m)));
  }
}

TEST_CASE("determinant is invariant under relabeling") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 2 + static_cast<int>(uniform_below(rng, 9));
    const Graph g = random_connected_graph(
        order, static_cast<int>(uniform_below(rng, order)), rng);
    const BigInt base = det_bareiss(distance_matrix(g));
    for (int t = 0; t < 100; ++t) {
      std::vector<int> perm(order);
      for (int i = 0; i < order; ++i) perm[i] = i;
      for (int i = order - 1; i > 0; --i)
        std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
      REQUIRE(det_bareiss(distance_matrix(relabel(g, perm))) == base);
    }
  }
}

TEST_CASE("Hadamard bound dominates the determinant") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + uniform_below(rng, 7);
    const IntMatrix m = random_matrix(rng, dim);
    const BigInt d = det_bareiss(m);
    REQUIRE(d * d <= hadamard_bound_squared(m));
  }
}

TEST_CASE("linear solve and singularity detection") {
  RationalMatrix a(2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
  RationalMatrix b(2, 1);
  b(0, 0) = 5; b(1, 0) = 10;
  const RationalMatrix x = solve_rational(a, b);
  REQUIRE(a * x == b);
  REQUIRE(x(0, 0) == Rational(1));
  REQUIRE(x(1, 0) == Rational(3));

  RationalMatrix singular(2, 2, Rational(1));
  REQUIRE_THROWS_AS(solve_rational(singular, b), DomainError);
}
