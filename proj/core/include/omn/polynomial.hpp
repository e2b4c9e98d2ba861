#pragma once

#include <string>
#include <vector>

#include "omn/rational.hpp"

namespace omn {

/// Univariate polynomial with exact rational coefficients, ascending order,
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  /// a*t + b.
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  /// p(a*t + b).
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  /// Integral of p over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Polynomial conj() const { return *this; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const Polynomial& p);

}  // namespace omn
