#pragma once

// Internal 128-bit checked arithmetic. Elimination algorithms form products
// of intermediate entries that can exceed 64 bits long before the (small)
// final results do; they run on this type and narrow at the end.

#include <limits>

#include "latfree/checked.hpp"

namespace latfree::detail {

using Wide = __int128;

inline Wide wide_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Wide wide_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Wide wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("result does not fit in 64-bit integers");
  return static_cast<Int>(v);
}

inline Wide wide_floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

inline Wide wide_ceil_div(Wide a, Wide b) {
  Wide q = a / b;
  if (a % b != 0 && (a < 0) == (b < 0)) ++q;
  return q;
}

} // namespace latfree::detail
