#pragma once

#include <concepts>

#include "kmweyl/error.hpp"

namespace kmweyl {

// Overflow-trapping arithmetic for builtin integers. Every coefficient and
// coordinate in the library goes through these.
template <std::integral T>
constexpr T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <std::integral T>
constexpr T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <std::integral T>
constexpr T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace kmweyl
