#pragma once

// Exact univariate integer polynomials in t, their factored forms, and the
// ASCII text grammar used by catalog data, CLI output and golden files:
//
//   poly     := term (('+'|'-') term)*
//   term     := int | int? 't' ('^' uint)?
//   factored := ('(' poly ')' ('^' uint)?)+
//
// Whitespace is ignored. A leading sign on the first term is accepted.

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmweyl/checked.hpp"
#include "kmweyl/error.hpp"

namespace kmweyl {

template <std::signed_integral T>
class BasicPolynomial {
 public:
  using coefficient_type = T;

  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit BasicPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BasicPolynomial constant(T v) { return BasicPolynomial(std::vector<T>{v}); }
  static BasicPolynomial monomial(T coeff, std::size_t power) {
    std::vector<T> c(power + 1, T{0});
    c[power] = coeff;
    return BasicPolynomial(std::move(c));
  }

  // Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  // Coefficient of t^k; zero past the degree.
  T operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : T{0}; }

  T eval(T x) const {
    T acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
    return acc;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{0});
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_add(a[k], b[k]);
    return BasicPolynomial(std::move(r));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{0});
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_sub(a[k], b[k]);
    return BasicPolynomial(std::move(r));
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{0});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return BasicPolynomial(std::move(r));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = *this + o; }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;  // c_[k] is the coefficient of t^k
};

using Polynomial = BasicPolynomial<std::int64_t>;

template <std::signed_integral T>
BasicPolynomial<T> pow(const BasicPolynomial<T>& p, unsigned n) {
  BasicPolynomial<T> r = BasicPolynomial<T>::constant(1);
  for (unsigned k = 0; k < n; ++k) r *= p;
  return r;
}

// Exact division over Z. Returns the quotient when `den` divides `num` with zero
// remainder, std::nullopt otherwise. Throws ValidationError on a zero divisor.
template <std::signed_integral T>
std::optional<BasicPolynomial<T>> divexact(const BasicPolynomial<T>& num, const BasicPolynomial<T>& den) {
  if (den.is_zero()) throw ValidationError("division by the zero polynomial");
  if (num.is_zero()) return BasicPolynomial<T>{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<T> rem = num.coeffs();
  const auto dd = static_cast<std::size_t>(den.degree());
  const T lead = den.coeffs().back();
  std::vector<T> quot(rem.size() - dd, T{0});
  for (std::size_t k = quot.size(); k-- > 0;) {
    const T top = rem[k + dd];
    if (top % lead != 0) return std::nullopt;
    const T q = top / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] = checked_sub(rem[k + j], checked_mul(q, den.coeffs()[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](T v) { return v != 0; })) return std::nullopt;
  return BasicPolynomial<T>(std::move(quot));
}

// ---------------------------------------------------------------------------
// Factored form

template <std::signed_integral T>
struct BasicFactoredPolynomial {
  struct Factor {
    BasicPolynomial<T> poly;
    unsigned multiplicity = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;

  BasicPolynomial<T> expand() const {
    auto r = BasicPolynomial<T>::constant(1);
    for (const auto& f : factors) r *= pow(f.poly, f.multiplicity);
    return r;
  }

  friend bool operator==(const BasicFactoredPolynomial&, const BasicFactoredPolynomial&) = default;
};

using FactoredPolynomial = BasicFactoredPolynomial<std::int64_t>;

template <std::signed_integral T>
BasicPolynomial<T> expand_factors(const BasicFactoredPolynomial<T>& f) {
  return f.expand();
}

// ---------------------------------------------------------------------------
// Text grammar

enum class PolyStyle {
  Spaced,   // "1 - t^2 - t^3"
  Compact,  // "1-t^2-t^3", used inside factored forms
};

template <std::signed_integral T>
std::string format_polynomial(const BasicPolynomial<T>& p, PolyStyle style = PolyStyle::Spaced) {
  if (p.is_zero()) return "0";
  const bool spaced = style == PolyStyle::Spaced;
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const T c = p.coeffs()[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    // Magnitude as unsigned so the most negative value formats correctly.
    using U = std::make_unsigned_t<T>;
    const U mag = neg ? U(0) - static_cast<U>(c) : static_cast<U>(c);
    if (first) {
      if (neg) out += '-';
    } else {
      out += spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+");
    }
    first = false;
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

template <std::signed_integral T>
std::string format_factored(const BasicFactoredPolynomial<T>& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& fac : f.factors) {
    out += '(' + format_polynomial(fac.poly, PolyStyle::Compact) + ')';
    if (fac.multiplicity != 1) out += '^' + std::to_string(fac.multiplicity);
  }
  return out;
}

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  template <class U>
  U integer() {
    if (!at_digit()) fail("expected digit");
    U v{0};
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      U next;
      if (__builtin_mul_overflow(v, U{10}, &next) || __builtin_add_overflow(next, U(s_[pos_] - '0'), &next))
        throw ParseError("integer literal out of range", pos_);
      v = next;
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(msg, pos_);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <std::signed_integral T>
BasicPolynomial<T> parse_poly(PolyLexer& lx) {
  std::vector<T> coeffs;
  bool first = true;
  for (;;) {
    bool neg = false;
    if (lx.accept('-')) {
      neg = true;
    } else if (lx.accept('+')) {
    } else if (!first) {
      break;
    }
    first = false;
    // term := int | int? 't' ('^' uint)?
    T coeff{1};
    bool have_number = false;
    if (lx.at_digit()) {
      coeff = lx.template integer<T>();
      have_number = true;
    }
    std::size_t power = 0;
    if (lx.accept('t')) {
      power = 1;
      if (lx.accept('^')) power = lx.template integer<std::size_t>();
      if (power > 100000) lx.fail("exponent too large");
    } else if (!have_number) {
      lx.fail("expected term");
    }
    if (neg) coeff = checked_sub(T{0}, coeff);
    if (coeffs.size() <= power) coeffs.resize(power + 1, T{0});
    coeffs[power] = checked_add(coeffs[power], coeff);
  }
  return BasicPolynomial<T>(std::move(coeffs));
}

}  // namespace detail

template <std::signed_integral T = std::int64_t>
BasicPolynomial<T> parse_polynomial(std::string_view text) {
  detail::PolyLexer lx(text);
  auto p = detail::parse_poly<T>(lx);
  if (!lx.at_end()) lx.fail("unexpected character");
  return p;
}

template <std::signed_integral T = std::int64_t>
BasicFactoredPolynomial<T> parse_factored(std::string_view text) {
  detail::PolyLexer lx(text);
  BasicFactoredPolynomial<T> out;
  if (lx.peek() != '(') lx.fail("expected '('");
  while (lx.accept('(')) {
    auto p = detail::parse_poly<T>(lx);
    lx.expect(')');
    unsigned mult = 1;
    if (lx.accept('^')) {
      mult = lx.template integer<unsigned>();
      if (mult == 0) lx.fail("factor multiplicity must be positive");
    }
    out.factors.push_back({std::move(p), mult});
  }
  if (!lx.at_end()) lx.fail("unexpected character");
  return out;
}

}  // namespace kmweyl
