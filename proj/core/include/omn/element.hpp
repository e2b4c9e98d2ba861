#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "omn/monomial.hpp"
#include "omn/rational.hpp"

namespace omn {

/// Finite linear combination of monomials with exact complex-rational
/// coefficients. Zero coefficients are never stored. Two elements with
/// different term maps may still be equal in the algebra; use is_zero.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  Element(const Monomial& mon, Scalar coeff = Scalar(1));  // NOLINT(google-explicit-constructor)

  static Element zero() { return {}; }
  static Element one() { return Element(Monomial::one()); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the formal triple (0 if absent).
  Scalar coefficient(const Monomial& mon) const;

  void add_term(const Monomial& mon, const Scalar& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return Element() - a; }
  friend Element operator*(const Scalar& c, const Element& a);

  /// Term-level (syntactic) equality.
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

std::string to_string(const Element& x);

void validate(const Element& x, const AlgebraParams& params);

Element mul(const Element& a, const Element& b, const AlgebraParams& params);
Element adjoint(const Element& a);

/// Product of a left-to-right sequence of factors.
Element product(const std::vector<Element>& factors, const AlgebraParams& params);

/// sum_i S_i S_i^*.
Element cuntz_sum(const AlgebraParams& params);

/// Phi(x) = sum_i S_i x S_i^*.
Element canonical_endo(const Element& x, const AlgebraParams& params);

/// Phi applied l times.
Element canonical_endo_power(const Element& x, int l, const AlgebraParams& params);

/// Conditional expectation onto the gauge-fixed part: keeps degree-0 terms.
Element expectation(const Element& x);

/// Keeps the terms of the given gauge degree.
Element homogeneous_part(const Element& x, std::int64_t degree);

/// phi(S_mu z^k S_nu^*) = delta_{mu,nu} delta_{k,0} n^{-|mu|}, extended linearly.
/// Well defined on the algebra, not just on formal triples.
Scalar kms_state(const Element& x, const AlgebraParams& params);

/// Decides x = 0 in the algebra exactly through the faithful shift
/// representation (variant A). Throws Unsupported for n = 1.
bool is_zero(const Element& x, const AlgebraParams& params);

inline bool equal_in_algebra(const Element& a, const Element& b, const AlgebraParams& params) {
  return is_zero(a - b, params);
}

/// Dimension of the linear span of the given elements inside the algebra.
/// Throws Unsupported for n = 1 and BoundExceeded if the total number of
/// distinct terms exceeds max_terms.
std::size_t span_dimension(const std::vector<Element>& elements, const AlgebraParams& params,
                           std::size_t max_terms = 200000);

/// Parses a product of generators such as "S_12 z^-3 S_2* z", "1", "S_{1,10}*".
Element parse_expression(const std::string& text, const AlgebraParams& params);

}  // namespace omn
