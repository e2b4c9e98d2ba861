#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omn/monomial.hpp"
#include "omn/piecewise.hpp"

namespace omn {

/// Coefficient data of the 2x2 projection
///   P = [ S_1 a_1 + phi(a_0) + a_1 S_1^*    S_2 a_1 + b_1 S_2^*           ]
///       [ S_2 b_1 + a_1 S_2^*               S_1 b_1 + phi(b_0) + b_1 S_1^* ]
/// over O_(1,2)(T), where phi(a)(t) = a(2t). a_1 and b_1 enter through their
/// squares, which are exact piecewise polynomials.
struct ProjectionData {
  PiecewiseFunction a0;
  PiecewiseFunction b0;
  PiecewiseFunction a1sq;
  PiecewiseFunction b1sq;
  PiecewiseFunction delta1;  // indicator of [3/4, 7/8)
  PiecewiseFunction delta2;  // indicator of [1/4, 3/8)
};

/// phi(a)(t) = a(2t).
inline PiecewiseFunction phi(const PiecewiseFunction& f) { return dilate(f, 2); }

/// a_1^2 = (phi(a_0) - phi(a_0^2)) delta1, b_1^2 = (phi(a_0) - phi(a_0^2)) delta2.
ProjectionData derive_data(const PiecewiseFunction& a0, const PiecewiseFunction& b0);

ProjectionData build_canonical_data();

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::optional<Rational> witness;  // a point where the identity fails
};

struct ConditionReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// The sufficient conditions for P^2 = P, checked as exact piecewise identities
/// (conditions on bare a_1, b_1 at the squared level), nonnegativity of a_1^2
/// and b_1^2, and the telescoping sums sum_{k<=m-2} a_0^k a_1^2 = (a_0 - a_0^m) delta1
/// (and the b-version) for m = 2..5.
ConditionReport check_conditions(const ProjectionData& data);

/// Single-piece perturbations of a_0, b_0, a_1^2, b_1^2 by +1/100.
std::vector<std::pair<std::string, ProjectionData>> perturbations(const ProjectionData& data);

/// S_mu f(z) S_nu^* with f on the numeric backend, for (m,n) = (1,2).
struct FuncTerm {
  Word mu;
  NumericFunction f;
  Word nu;
};

class FuncElement {
 public:
  FuncElement() = default;
  FuncElement(std::vector<FuncTerm> terms) : terms_(std::move(terms)) {}  // NOLINT

  const std::vector<FuncTerm>& terms() const { return terms_; }

  friend FuncElement operator+(const FuncElement& a, const FuncElement& b);
  friend FuncElement operator-(const FuncElement& a, const FuncElement& b);
  friend FuncElement operator*(const FuncElement& a, const FuncElement& b);

 private:
  std::vector<FuncTerm> terms_;
};

FuncElement adjoint(const FuncElement& x);

/// S_v^* h(z) S_w for words of equal length.
NumericFunction contract(const Word& v, const NumericFunction& h, const Word& w);

/// Refines every term to common word lengths per gauge degree and sums the
/// coefficient functions of equal (mu, nu); x = 0 iff every sum vanishes.
std::vector<FuncTerm> canonical_terms(const FuncElement& x);

/// max over (mu, nu) of max_j |f_(mu,nu)(j/grid)|.
double max_abs_on_grid(const FuncElement& x, std::size_t grid);

using FuncMatrix = std::vector<std::vector<FuncElement>>;

FuncMatrix assemble(const ProjectionData& data);

struct SquareReport {
  std::size_t grid = 0;
  double residual = 0.0;           // P^2 - P
  double residual_doubled = 0.0;   // same on twice the grid
  double adjoint_residual = 0.0;   // P - P^*
};

/// Direct numeric squaring of P. Throws Unsupported unless params is (1,2).
SquareReport assemble_and_square(const ProjectionData& data, std::size_t grid = 4096,
                                 const AlgebraParams& params = AlgebraParams(1, 2));

/// (int a_0 + int b_0) / 2.
Rational kms_trace(const ProjectionData& data);

/// winding(phi(a_0 delta1)) + winding(phi(b_0 delta2)).
BigInt k0_class(const ProjectionData& data);

}  // namespace omn
