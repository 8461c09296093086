#pragma once

// Truncated power series over Z and Poincare polynomials of finite Weyl groups.

#include <algorithm>
#include <cstddef>
#include <string>
#include <optional>
#include <vector>

#include "kmweyl/cartan.hpp"
#include "kmweyl/checked.hpp"
#include "kmweyl/polynomial.hpp"

namespace kmweyl {

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline std::optional<Polynomial> poly_divexact(const Polynomial& num, const Polynomial& den) {
  return divexact(num, den);
}

// Coefficients c(0..order) of num/den as a formal power series. With a
// constant term other than +-1 the quotient may leave Z; that is reported as a
// ConsistencyError rather than rounded.
template <std::signed_integral T>
std::vector<T> series_div(const BasicPolynomial<T>& num, const BasicPolynomial<T>& den, std::size_t order) {
  if (den[0] == 0) throw ValidationError("series division needs a nonzero constant term in the denominator");
  const T d0 = den[0];
  std::vector<T> c(order + 1, T{0});
  for (std::size_t n = 0; n <= order; ++n) {
    T acc = num[n];
    const std::size_t top = std::min<std::size_t>(n, den.coeffs().size() - 1);
    for (std::size_t k = 1; k <= top; ++k) acc = checked_sub(acc, checked_mul(den.coeffs()[k], c[n - k]));
    if (acc % d0 != 0) throw ConsistencyError("series quotient is not integral at degree " + std::to_string(n));
    c[n] = acc / d0;
  }
  return c;
}

// Same, with a sequence denominator (e.g. a truncated growth series).
template <std::signed_integral T>
std::vector<T> series_div(const BasicPolynomial<T>& num, const std::vector<T>& den, std::size_t order) {
  return series_div(num, BasicPolynomial<T>(den), order);
}

// Degrees of the basic invariants of an irreducible finite Weyl group.
inline std::vector<int> invariant_degrees(const FiniteComponent& c) {
  std::vector<int> d;
  const int n = c.rank;
  switch (c.family) {
    case 'A':
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  if (d.empty()) throw ValidationError("no degree table for finite type " + std::string(1, c.family) + std::to_string(n));
  return d;
}

// Poincare polynomial prod_i (1 + t + ... + t^(d_i - 1)) over the degrees of
// every Dynkin component. Throws ValidationError for non-finite input.
inline Polynomial poincare_finite(const CartanMatrix& m) {
  auto p = Polynomial::constant(1);
  for (const auto& comp : finite_components(m))
    for (int d : invariant_degrees(comp)) p *= Polynomial(std::vector<Int>(static_cast<std::size_t>(d), 1));
  return p;
}

}  // namespace kmweyl
