#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <random>

#include "distdet/error.hpp"

namespace distdet {

// All arithmetic in this library is exact. Integers are unbounded;
// rationals are kept gcd-reduced with a positive denominator (zero is 0/1).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::pow;

/// num/den as a reduced rational. Throws DomainError on a zero denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Exact conversion to an integer; throws if the value has a remainder.
inline BigInt to_integer(const Rational& r) {
  if (!is_integer(r)) throw DomainError("to_integer: value is not integral");
  return numerator(r);
}

// Seeded generation uses std::mt19937_64 (fully specified by the standard)
// plus the rejection sampler below, so identical seeds give identical graphs
// on every platform.
using Rng = std::mt19937_64;

/// Unbiased uniform draw from {0, ..., bound-1}.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: zero bound");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % bound;
}

}  // namespace distdet
