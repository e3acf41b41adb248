#pragma once

#include <cstdlib>

#include "distdet/determinant.hpp"
#include "distdet/error.hpp"
#include "distdet/matrix.hpp"
#include "distdet/numeric.hpp"

namespace distdet {

// Reducing the doubly centered distance block of an odd cycle of length
// 2k+1 leaves a k x k core C = (1/2) B B^T - 2I with border row
// F = (1/2) 1 B^T + 1, where B is the bidiagonal factor below. The exact
// values of det C and F C^-1 F^T drive the closed-form determinants; this
// header builds the matrices and computes both quantities by elimination
// so the closed forms can be checked against them.

/// k x k lower bidiagonal factor: -1 on the diagonal and subdiagonal.
inline IntMatrix reduction_bidiagonal(int k) {
  if (k < 1) throw DomainError("reduction_bidiagonal: k must be >= 1");
  IntMatrix b(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    b(i, i) = -1;
    if (i > 0) b(i, i - 1) = -1;
  }
  return b;
}

/// Core matrix (1/2) B B^T - 2I: symmetric tridiagonal, diagonal
/// (-3/2, -1, ..., -1), off-diagonal 1/2.
inline RationalMatrix reduction_core(int k) {
  if (k < 1) throw DomainError("reduction_core: k must be >= 1");
  const RationalMatrix b = to_rational(reduction_bidiagonal(k));
  const Rational half(1, 2);
  RationalMatrix c = half * (b * b.transposed());
  for (int i = 0; i < k; ++i) c(i, i) -= 2;
  return c;
}

/// Border row (1/2) 1 B^T + 1 = (1/2, 0, ..., 0), stored 1 x k.
inline RationalMatrix reduction_border(int k) {
  if (k < 1) throw DomainError("reduction_border: k must be >= 1");
  const RationalMatrix b = to_rational(reduction_bidiagonal(k));
  RationalMatrix ones(1, static_cast<std::size_t>(k), Rational(1));
  RationalMatrix f = ones * b.transposed();
  const Rational half(1, 2);
  for (int j = 0; j < k; ++j) f(0, j) = half * f(0, j) + 1;
  return f;
}

/// k x k second-difference matrix: tridiagonal (1, -2, 1).
inline IntMatrix second_difference(int k) {
  if (k < 1) throw DomainError("second_difference: k must be >= 1");
  IntMatrix h(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    h(i, i) = -2;
    if (i > 0) {
      h(i, i - 1) = 1;
      h(i - 1, i) = 1;
    }
  }
  return h;
}

/// Closed form det of second_difference(k): (-1)^k (k+1).
inline BigInt second_difference_det(int k) {
  if (k < 1) throw DomainError("second_difference_det: k must be >= 1");
  BigInt v = k + 1;
  return k % 2 == 0 ? v : BigInt(-v);
}

struct CoreInvariants {
  Rational core_det;     // det C
  Rational border_form;  // F C^-1 F^T
};

/// Computes det C and F C^-1 F^T by exact rational elimination, with no
/// use of the closed forms. The caller compares against core_det_closed
/// and border_form_closed.
inline CoreInvariants core_invariants(int k) {
  if (k < 1) throw DomainError("core_invariants: k must be >= 1");
  const RationalMatrix c = reduction_core(k);
  const RationalMatrix f = reduction_border(k);
  const Rational det = det_rational(c);
  if (det == 0) throw DomainError("core_invariants: singular core matrix");
  const RationalMatrix x = solve_rational(c, f.transposed());
  Rational form(0);
  for (int j = 0; j < k; ++j) form += f(0, j) * x(j, 0);
  return CoreInvariants{det, form};
}

/// (-1)^k (2k+1) / 2^k.
inline Rational core_det_closed(int k) {
  if (k < 1) throw DomainError("core_det_closed: k must be >= 1");
  const BigInt num = (k % 2 == 0) ? BigInt(2 * k + 1) : BigInt(-(2 * k + 1));
  return make_rational(num, pow(BigInt(2), static_cast<unsigned>(k)));
}

/// -k / (2(2k+1)).
inline Rational border_form_closed(int k) {
  if (k < 1) throw DomainError("border_form_closed: k must be >= 1");
  return make_rational(BigInt(-k), BigInt(2) * (2 * k + 1));
}

/// Doubly centered distance block of the cycle of length p on its vertices
/// 2..p (1-based): entry (i,j) of the distance matrix minus the distances
/// of i and j to vertex 1. Matches the construction
/// D* - d1 1^T - 1 d1^T from the cycle's distance matrix.
inline IntMatrix centered_cycle_block(int p) {
  if (p < 3) throw DomainError("centered_cycle_block: cycle length must be >= 3");
  const auto cyc_dist = [p](int i, int j) {
    const int d = std::abs(i - j);
    return std::min(p - d, d);
  };
  const auto border = [p, &cyc_dist](int i) { return cyc_dist(1, i); };
  IntMatrix m(static_cast<std::size_t>(p - 1));
  for (int i = 2; i <= p; ++i)
    for (int j = 2; j <= p; ++j)
      m(i - 2, j - 2) = cyc_dist(i, j) - border(i) - border(j);
  return m;
}

}  // namespace distdet
