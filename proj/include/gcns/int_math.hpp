#pragma once

#include <cstdint>
#include <numeric>

#include "gcns/errors.hpp"

namespace gcns {

// All semigroup arithmetic is exact 64-bit with overflow detection; derived
// values such as h_k*a + d*b_k grow multiplicatively in the parameters.
using Int = std::int64_t;

inline Int checked_add(Int lhs, Int rhs) {
  Int out;
  if (__builtin_add_overflow(lhs, rhs, &out))
    raise(errc::arithmetic_overflow, "integer overflow in addition");
  return out;
}

inline Int checked_sub(Int lhs, Int rhs) {
  Int out;
  if (__builtin_sub_overflow(lhs, rhs, &out))
    raise(errc::arithmetic_overflow, "integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int lhs, Int rhs) {
  Int out;
  if (__builtin_mul_overflow(lhs, rhs, &out))
    raise(errc::arithmetic_overflow, "integer overflow in multiplication");
  return out;
}

/// Residue of v in [0, m), also for negative v. Requires m > 0.
inline Int mod_nonneg(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace gcns
