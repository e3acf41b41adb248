#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "distdet/determinant.hpp"
#include "distdet/formulas.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"

using namespace distdet;

TEST_CASE("tree determinant closed form") {
  REQUIRE(tree_det(1) == 0);
  REQUIRE(tree_det(2) == -1);
  REQUIRE(tree_det(4) == -12);
  REQUIRE(tree_det(5) == 32);
  REQUIRE_THROWS_AS(tree_det(0), DomainError);

  // spot-check against brute force on fixed trees: path and star
  REQUIRE(det_bareiss(distance_matrix(generate_path(4))) == tree_det(4));
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  REQUIRE(det_bareiss(distance_matrix(star)) == tree_det(4));
}

TEST_CASE("unicyclic determinant closed form") {
  REQUIRE(unicyclic_det(3, 0) == 2);
  REQUIRE(unicyclic_det(4, 5) == 0);
  REQUIRE(unicyclic_det(5, 2) == 44);
  REQUIRE(unicyclic_det(1, 3) == tree_det(4));
  REQUIRE_THROWS_AS(unicyclic_det(0, 0), DomainError);
  REQUIRE_THROWS_AS(unicyclic_det(3, -1), DomainError);

  bool warned = false;
  REQUIRE(unicyclic_det(2, 4, &warned) == 0);
  REQUIRE(warned);

  REQUIRE(det_bareiss(distance_matrix(generate_cycle(5))) ==
          unicyclic_det(5, 0));
  REQUIRE(det_bareiss(distance_matrix(
              plant_random_trees(generate_cycle(5), 2, std::uint64_t{1}))) ==
          unicyclic_det(5, 2));
}

TEST_CASE("bicyclic determinant closed form") {
  REQUIRE(bicyclic_det(3, 3, 0) == 12);
  REQUIRE(bicyclic_det(3, 3, 1) == -33);
  REQUIRE(bicyclic_det(3, 4, 7) == 0);
  REQUIRE_THROWS_AS(bicyclic_det(0, 3, 0), DomainError);
  REQUIRE_THROWS_AS(bicyclic_det(3, 3, -1), DomainError);

  bool warned = false;
  REQUIRE(bicyclic_det(3, 2, 1, &warned) == 0);
  REQUIRE(warned);
}

TEST_CASE("bicyclic determinant degenerations and symmetry") {
  for (int n = 0; n <= 10; ++n) {
    REQUIRE(bicyclic_det(1, 1, n) == tree_det(n + 1));
    for (int p = 1; p <= 9; p += 2) {
      REQUIRE(bicyclic_det(p, 1, n) == unicyclic_det(p, n));
      for (int q = 1; q <= 9; q += 2)
        REQUIRE(bicyclic_det(p, q, n) == bicyclic_det(q, p, n));
    }
  }
}

TEST_CASE("bicyclic determinant sign alternates with the tree mass") {
  for (int p = 3; p <= 9; p += 2)
    for (int q = p; q <= 9; q += 2)
      for (int n = 0; n <= 10; ++n) {
        const BigInt d = bicyclic_det(p, q, n);
        REQUIRE(d != 0);
        REQUIRE((d > 0) == (n % 2 == 0));
      }
}

TEST_CASE("base value pairs") {
  const auto [a0, a1] = base_values(3, 3);
  REQUIRE(a0 == 12);
  REQUIRE(a1 == -33);

  const auto [b0, b1] = base_values(4, 5);
  REQUIRE(b0 == 0);
  REQUIRE(b1 == 0);

  const auto [c0, c1] = base_values(5, 7);
  REQUIRE(c0 == 102);
  REQUIRE(c1 == -239);

  REQUIRE_THROWS_AS(base_values(2, 5), DomainError);
}

TEST_CASE("closed recurrence solution") {
  const RecurrenceSeed seed{Rational(12), Rational(-33)};
  REQUIRE(solve_recurrence(seed, 0) == Rational(12));
  REQUIRE(solve_recurrence(seed, 1) == Rational(-33));
  REQUIRE(solve_recurrence(seed, 2) == Rational(84));

  const RecurrenceSeed zero{Rational(0), Rational(0)};
  for (int n = 0; n <= 12; ++n) REQUIRE(solve_recurrence(zero, n) == 0);

  REQUIRE_THROWS_AS(solve_recurrence(seed, -1), DomainError);

  // the closed solution satisfies the recurrence it solves
  const RecurrenceSeed odd{make_rational(7, 3), make_rational(-1, 2)};
  Rational a = odd.f0, b = odd.f1;
  for (int n = 2; n <= 15; ++n) {
    const Rational next = -4 * b - 4 * a;
    REQUIRE(solve_recurrence(odd, n) == next);
    a = b;
    b = next;
  }
}

TEST_CASE("closed formula equals the recurrence from base values") {
  for (int p = 1; p <= 9; p += 2)
    for (int q = 1; q <= 9; q += 2) {
      const RecurrenceSeed seed{Rational(bicyclic_det(p, q, 0)),
                                Rational(bicyclic_det(p, q, 1))};
      for (int n = 0; n <= 10; ++n)
        REQUIRE(Rational(bicyclic_det(p, q, n)) ==
                solve_recurrence(seed, n));
    }
}

TEST_CASE("recurrence residual") {
  REQUIRE(recurrence_residual(BigInt(12), BigInt(-33), BigInt(84)) == 0);
  REQUIRE(recurrence_residual(BigInt(1), BigInt(0), BigInt(1)) == 5);

  const BigInt d0 = det_bareiss(distance_matrix(generate_gpqn(5, 5, 1)));
  const BigInt d1 = det_bareiss(distance_matrix(generate_gpqn(5, 5, 2)));
  const BigInt d2 = det_bareiss(distance_matrix(generate_gpqn(5, 5, 3)));
  REQUIRE(recurrence_residual(d0, d1, d2) == 0);
}
