#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "distdet/error.hpp"
#include "distdet/numeric.hpp"

namespace distdet {

// Closed-form determinants of distance matrices, kept as literal rational
// expressions with a final integrality check rather than pre-simplified
// integer arithmetic.

namespace detail {

inline BigInt neg_two_pow(long long n) {
  const BigInt v = pow(BigInt(2), static_cast<unsigned>(n));
  return n % 2 == 0 ? v : BigInt(-v);
}

inline BigInt require_integral(const Rational& r, const char* what) {
  if (!is_integer(r))
    throw std::logic_error(std::string("internal: non-integral value in ") + what);
  return numerator(r);
}

}  // namespace detail

/// Determinant of the distance matrix of any tree on n vertices:
/// (-1)^(n-1) (n-1) 2^(n-2). Depends only on n (Graham-Pollak).
/// n = 1 is the 1x1 zero matrix, determinant 0.
inline BigInt tree_det(long long n) {
  if (n < 1) throw DomainError("tree_det: order must be >= 1");
  if (n == 1) return 0;
  BigInt v = BigInt(n - 1) * pow(BigInt(2), static_cast<unsigned>(n - 2));
  return (n - 1) % 2 == 0 ? v : BigInt(-v);
}

/// Determinant for a unicyclic graph: cycle length p, tree mass n
/// (order p+n). Zero when p is even; otherwise
/// [ (p-1)(p+1)/4 + (n/2) p ] (-2)^n.
///
/// p = 1 is accepted (a single vertex viewed as a degenerate cycle), which
/// reduces the formula to the tree case. p = 2 describes no simple graph;
/// the result is 0 and *length_two_warning is set when provided.
inline BigInt unicyclic_det(long long p, long long n,
                            bool* length_two_warning = nullptr) {
  if (p < 1) throw DomainError("unicyclic_det: cycle length must be >= 1");
  if (n < 0) throw DomainError("unicyclic_det: tree mass must be >= 0");
  if (p == 2) {
    if (length_two_warning) *length_two_warning = true;
    return 0;
  }
  if (p % 2 == 0) return 0;
  const Rational bracket = make_rational(BigInt(p - 1) * BigInt(p + 1), 4) +
                           make_rational(BigInt(n), 2) * Rational(p);
  return detail::require_integral(bracket * Rational(detail::neg_two_pow(n)),
                                  "unicyclic_det");
}

/// Determinant for a bicyclic graph with edge-disjoint cycles of lengths
/// p and q and tree mass n (order p+q-1+n). Zero when p or q is even;
/// otherwise [ (pq-1)(p+q)/4 + (n/2) pq ] (-2)^n.
///
/// p or q may be 1 (degenerate cycles), reducing to the unicyclic and tree
/// formulas; a value of 2 yields 0 with the warning flag set.
inline BigInt bicyclic_det(long long p, long long q, long long n,
                           bool* length_two_warning = nullptr) {
  if (p < 1 || q < 1) throw DomainError("bicyclic_det: cycle lengths must be >= 1");
  if (n < 0) throw DomainError("bicyclic_det: tree mass must be >= 0");
  if (p == 2 || q == 2) {
    if (length_two_warning) *length_two_warning = true;
    return 0;
  }
  if (p % 2 == 0 || q % 2 == 0) return 0;
  const BigInt pq = BigInt(p) * BigInt(q);
  const Rational bracket = make_rational((pq - 1) * BigInt(p + q), 4) +
                           make_rational(BigInt(n), 2) * Rational(pq);
  return detail::require_integral(bracket * Rational(detail::neg_two_pow(n)),
                                  "bicyclic_det");
}

/// The two seed determinants for cycle lengths p, q >= 3: tree mass 0 and 1.
/// (0, 0) when p or q is even; otherwise
/// ( (pq-1)(p+q)/4 , -(p+q)(pq-1)/2 - pq ).
inline std::pair<BigInt, BigInt> base_values(long long p, long long q) {
  if (p < 3 || q < 3)
    throw DomainError("base_values: cycle lengths must be >= 3");
  if (p % 2 == 0 || q % 2 == 0) return {BigInt(0), BigInt(0)};
  const BigInt pq = BigInt(p) * BigInt(q);
  const BigInt d0 = detail::require_integral(
      make_rational((pq - 1) * BigInt(p + q), 4), "base_values");
  const BigInt d1 = detail::require_integral(
      make_rational(-BigInt(p + q) * (pq - 1), 2) - Rational(pq), "base_values");
  return {d0, d1};
}

/// Initial values f(0), f(1) for the pendant-path recurrence.
struct RecurrenceSeed {
  Rational f0;
  Rational f1;
};

/// Closed solution of f(n) = -4 f(n-1) - 4 f(n-2):
/// f(n) = [ f0 - (n/2)(f1 + 2 f0) ] (-2)^n.
inline Rational solve_recurrence(const RecurrenceSeed& seed, long long n) {
  if (n < 0) throw DomainError("solve_recurrence: n must be >= 0");
  const Rational bracket =
      seed.f0 - make_rational(BigInt(n), 2) * (seed.f1 + 2 * seed.f0);
  return bracket * Rational(detail::neg_two_pow(n));
}

/// Residual of the recurrence on three consecutive determinants
/// (tree mass n-2, n-1, n): d_n + 4 d_{n-1} + 4 d_{n-2}. Zero whenever the
/// inputs really are consecutive members of one family.
inline BigInt recurrence_residual(const BigInt& d_nm2, const BigInt& d_nm1,
                                  const BigInt& d_n) {
  return d_n + 4 * d_nm1 + 4 * d_nm2;
}

}  // namespace distdet
