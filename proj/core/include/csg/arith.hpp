#pragma once

#include <cstdint>
#include <numeric>

#include "csg/error.hpp"

namespace csg {

using Coord = std::int64_t;

namespace arith {

inline Coord add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorKind::ArithmeticOverflow, "integer overflow in addition");
  }
  return r;
}

inline Coord sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) {
    fail(ErrorKind::ArithmeticOverflow, "integer overflow in subtraction");
  }
  return r;
}

inline Coord mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorKind::ArithmeticOverflow, "integer overflow in multiplication");
  }
  return r;
}

__extension__ typedef __int128 Wide;

inline Coord narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    fail(ErrorKind::ArithmeticOverflow, "value does not fit in 64 bits");
  }
  return static_cast<Coord>(v);
}

// Floor division for a positive divisor.
inline Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

inline Coord gcd(Coord a, Coord b) { return std::gcd(a, b); }

}  // namespace arith
}  // namespace csg
