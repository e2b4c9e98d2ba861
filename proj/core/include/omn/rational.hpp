#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace omn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign, no decimals). Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Always emits "p/q" with q >= 1, e.g. "3/1", "-7/16".
std::string format_rational(const Rational& value);

/// Short human form: "3", "-7/16".
std::string pretty_rational(const Rational& value);

/// Floor division toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Least nonnegative residue of a modulo b (b > 0).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

std::int64_t ipow(std::int64_t base, int exponent);

/// Exact complex rational re + i*im.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Scalar conj() const { return {re, -im}; }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

}  // namespace omn
