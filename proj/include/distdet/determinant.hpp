#pragma once

#include <cstddef>
#include <vector>

#include "distdet/error.hpp"
#include "distdet/matrix.hpp"
#include "distdet/numeric.hpp"

namespace distdet {

/// Exact integer determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions below
/// are exact and nothing ever leaves the integers. Rows are swapped only to
/// avoid a zero pivot; with exact arithmetic no other pivoting is needed.
inline BigInt det_bareiss(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);

  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    if (a(col, col) == 0) {
      std::size_t r = col + 1;
      while (r < n && a(r, col) == 0) ++r;
      if (r == n) return BigInt(0);
      a.swap_rows(col, r);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < n; ++i)
      for (std::size_t j = col + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(col, col) - a(i, col) * a(col, j)) / prev;
    prev = a(col, col);
  }
  return sign > 0 ? a(n - 1, n - 1) : BigInt(-a(n - 1, n - 1));
}

constexpr std::size_t kNaiveDetMaxDim = 12;

/// Independent determinant oracle: cofactor expansion along the first
/// remaining row, memoized on the set of unused columns. Shares no code
/// path with det_bareiss; used to cross-validate it.
inline BigInt det_naive(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kNaiveDetMaxDim)
    throw DomainError("det_naive: dimension exceeds the cost guard of 12");

  std::vector<BigInt> memo(std::size_t(1) << n);
  std::vector<bool> known(std::size_t(1) << n, false);

  auto rec = [&](auto&& self, unsigned mask) -> const BigInt& {
    if (known[mask]) return memo[mask];
    BigInt value;
    if (mask == 0) {
      value = 1;
    } else {
      // Row index: rows 0..r-1 were consumed by the callers above.
      std::size_t row = n;
      for (unsigned m2 = mask; m2; m2 >>= 1) row -= (m2 & 1u);
      int sign = 1;
      for (std::size_t col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        if (m(row, col) != 0)
          value += sign * m(row, col) * self(self, mask & ~(1u << col));
        sign = -sign;
      }
    }
    memo[mask] = std::move(value);
    known[mask] = true;
    return memo[mask];
  };

  return rec(rec, (1u << n) - 1u);
}

/// Exact rational determinant by Gaussian elimination. Pivots on the
/// largest magnitude in the column, which keeps intermediate numerators
/// and denominators from ballooning.
inline Rational det_rational(RationalMatrix a) {
  const std::size_t n = a.dim();
  Rational det(1);
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a(r, col)) > abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0) return Rational(0);
    if (pivot != col) {
      a.swap_rows(col, pivot);
      sign = -sign;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return sign > 0 ? det : Rational(-det);
}

/// Solves a x = b exactly (b is a column). Throws DomainError if singular.
inline RationalMatrix solve_rational(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.dim();
  if (b.rows() != n || b.cols() != 1)
    throw DomainError("solve_rational: right-hand side shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a(r, col)) > abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0) throw DomainError("solve_rational: singular matrix");
    if (pivot != col) {
      a.swap_rows(col, pivot);
      b.swap_rows(col, pivot);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b(i, 0) -= f * b(col, 0);
    }
  }
  RationalMatrix x(n, 1);
  for (std::size_t i = 0; i < n; ++i) x(i, 0) = b(i, 0) / a(i, i);
  return x;
}

/// Squared Hadamard bound: product of the squared row norms.
/// det(m)^2 never exceeds it; used as a sanity invariant in tests.
inline BigInt hadamard_bound_squared(const IntMatrix& m) {
  const std::size_t n = m.dim();
  BigInt bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j) * m(i, j);
    bound *= row;
  }
  return bound;
}

}  // namespace distdet
