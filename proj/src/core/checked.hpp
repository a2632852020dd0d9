#pragma once

// Overflow-checked 64-bit integer arithmetic. Every operation either returns
// the exact result or throws ErrorKind::Overflow; nothing wraps.

#include <cstdint>
#include <cstdlib>

#include "error.hpp"

namespace coincalc {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

// Multiply-accumulate: acc + a*b.
inline Int fma(Int acc, Int a, Int b) { return add(acc, mul(a, b)); }

// Least nonnegative residue; modulus must be positive.
inline Int mod(Int a, Int modulus) {
  Int r = a % modulus;
  return r < 0 ? r + modulus : r;
}

// Quotient rounded to the nearest integer, so the remainder a - q*b has
// absolute value at most |b|/2.
inline Int nearest_quotient(Int a, Int b) {
  if (b == -1) return neg(a);
  Int q = a / b;
  Int r = a - q * b;
  // 2|r| > |b| means the other neighbour is closer.
  if (r != 0 && abs(r) > abs(b) - abs(r)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return mul(abs(a) / gcd(a, b), abs(b));
}

}  // namespace checked
}  // namespace coincalc
