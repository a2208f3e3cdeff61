#pragma once

#include <cstdint>
#include <limits>

#include "latfree/errors.hpp"

namespace latfree {

/// All lattice data is held in checked 64-bit integers. Values occurring in
/// the classifications are tiny (diagonals up to 1806, products up to a few
/// million), so the checks never fire on valid workloads; they exist to turn
/// any accidental wraparound into a hard error.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
  return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// gcd(a, b) >= 0. Rejects INT64_MIN inputs, whose magnitude is not
/// representable.
inline Int gcd_nonneg(Int a, Int b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor division for b > 0 (rounds toward minus infinity).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

} // namespace latfree
