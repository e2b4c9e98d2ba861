#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omn/errors.hpp"
#include "omn/polynomial.hpp"
#include "omn/rational.hpp"

namespace omn {

/// Numeric piece: a sum of terms c(t) * exp(2 pi i r t) * prod_j sqrt(q_j(t)),
/// c with complex double coefficients, r rational, q_j exact polynomials.
/// Closed under the operations needed to square the 2x2 projection matrix.
struct NumericTerm {
  std::vector<std::complex<double>> coeffs;  // ascending powers of t
  Rational frequency{0};
  std::vector<Polynomial> radicands;  // sorted

  std::complex<double> operator()(const Rational& t) const;
};

class NumericPiece {
 public:
  NumericPiece() = default;
  NumericPiece(std::complex<double> constant);  // NOLINT(google-explicit-constructor)
  explicit NumericPiece(const Polynomial& p);

  /// sqrt(p(t)), p assumed nonnegative on the piece; negative rounding noise clamps to 0.
  static NumericPiece sqrt_of(const Polynomial& p);
  /// exp(2 pi i r t).
  static NumericPiece phase(const Rational& frequency);

  const std::vector<NumericTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::complex<double> operator()(const Rational& t) const;

  NumericPiece compose_affine(const Rational& a, const Rational& b) const;
  NumericPiece conj() const;

  NumericPiece& operator+=(const NumericPiece& o);
  friend NumericPiece operator+(NumericPiece a, const NumericPiece& b) { return a += b; }
  friend NumericPiece operator-(const NumericPiece& a, const NumericPiece& b) { return a + b * NumericPiece(-1.0); }
  friend NumericPiece operator*(const NumericPiece& a, const NumericPiece& b);
  friend bool operator==(const NumericPiece& a, const NumericPiece& b);

 private:
  void add_term(NumericTerm term);
  std::vector<NumericTerm> terms_;
};

/// A function on T = [0,1) that is given by one piece per half-open interval
/// [b_i, b_{i+1}); breakpoints start at 0 and the last interval ends at 1.
/// Adjacent equal pieces are merged.
template <class Piece>
class Piecewise {
 public:
  Piecewise() : breakpoints_{Rational(0)}, pieces_{Piece()} {}
  Piecewise(std::vector<Rational> breakpoints, std::vector<Piece> pieces)
      : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.empty() || breakpoints_.size() != pieces_.size())
      throw InvalidInput("piecewise function needs one piece per breakpoint");
    if (sgn(breakpoints_.front()) != 0) throw InvalidInput("first breakpoint must be 0");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      if (i > 0 && breakpoints_[i] <= breakpoints_[i - 1])
        throw InvalidInput("breakpoints must be strictly increasing");
      if (breakpoints_[i] >= 1) throw InvalidInput("breakpoints must lie in [0,1)");
    }
    merge();
  }

  static Piecewise constant(Piece c) { return Piecewise({Rational(0)}, {std::move(c)}); }

  /// c on [lo, hi) (0 <= lo < hi <= 1), 0 elsewhere.
  static Piecewise on_interval(const Rational& lo, const Rational& hi, Piece c) {
    if (!(0 <= lo && lo < hi && hi <= 1)) throw InvalidInput("interval must satisfy 0 <= lo < hi <= 1");
    std::vector<Rational> b{Rational(0)};
    std::vector<Piece> p{sgn(lo) == 0 ? c : Piece()};
    if (sgn(lo) != 0) {
      b.push_back(lo);
      p.push_back(c);
    }
    if (hi < 1) {
      b.push_back(hi);
      p.push_back(Piece());
    }
    return Piecewise(std::move(b), std::move(p));
  }

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }

  Rational interval_end(std::size_t i) const { return i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : Rational(1); }

  /// Index of the interval containing t (t reduced mod 1).
  std::size_t locate(const Rational& t) const {
    Rational s = t - Rational(floor_rational(t));
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), s, RationalLess{});
    return static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1;
  }

  auto operator()(const Rational& t) const {
    Rational s = t - Rational(floor_rational(t));
    return pieces_[locate(s)](s);
  }

  bool is_zero() const { return pieces_.size() == 1 && pieces_[0].is_zero(); }

  /// Builds a function from a breakpoint set and a per-interval piece rule.
  static Piecewise build(std::vector<Rational> cuts,
                         const std::function<Piece(const Rational& lo, const Rational& hi)>& rule) {
    std::sort(cuts.begin(), cuts.end(), RationalLess{});
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const Rational hi = i + 1 < cuts.size() ? cuts[i + 1] : Rational(1);
      pieces.push_back(rule(cuts[i], hi));
    }
    return Piecewise(std::move(cuts), std::move(pieces));
  }

  /// Pointwise combination on the merged breakpoint set.
  template <class Op>
  static Piecewise combine(const Piecewise& f, const Piecewise& g, Op op) {
    std::vector<Rational> cuts = f.breakpoints_;
    cuts.insert(cuts.end(), g.breakpoints_.begin(), g.breakpoints_.end());
    return build(std::move(cuts), [&](const Rational& lo, const Rational& hi) {
      const Rational mid = (lo + hi) / 2;
      return op(f.pieces_[f.locate(mid)], g.pieces_[g.locate(mid)]);
    });
  }

  /// g(t) = f(frac(a*t + b)) on [0,1), a > 0.
  Piecewise pullback(const Rational& a, const Rational& b) const {
    if (sgn(a) <= 0) throw InvalidInput("pullback needs a positive scale");
    std::vector<Rational> cuts{Rational(0)};
    const BigInt j_lo = floor_rational(b);
    const BigInt j_hi = floor_rational(a + b);
    for (BigInt j = j_lo; j <= j_hi; ++j) {
      for (const auto& beta : breakpoints_) {
        const Rational t = (Rational(j) + beta - b) / a;
        if (0 <= t && t < 1) cuts.push_back(t);
      }
    }
    return build(std::move(cuts), [&](const Rational& lo, const Rational& hi) {
      const Rational s = a * ((lo + hi) / 2) + b;
      const BigInt j = floor_rational(s);
      return pieces_[locate(s - Rational(j))].compose_affine(a, b - Rational(j));
    });
  }

  Piecewise conj() const {
    std::vector<Piece> p;
    for (const auto& piece : pieces_) p.push_back(piece.conj());
    return Piecewise(breakpoints_, std::move(p));
  }

  friend Piecewise operator+(const Piecewise& f, const Piecewise& g) {
    return combine(f, g, [](const Piece& a, const Piece& b) { return a + b; });
  }
  friend Piecewise operator-(const Piecewise& f, const Piecewise& g) {
    return combine(f, g, [](const Piece& a, const Piece& b) { return a - b; });
  }
  friend Piecewise operator*(const Piecewise& f, const Piecewise& g) {
    return combine(f, g, [](const Piece& a, const Piece& b) { return a * b; });
  }
  friend bool operator==(const Piecewise& f, const Piecewise& g) {
    return f.breakpoints_ == g.breakpoints_ && f.pieces_ == g.pieces_;
  }

 private:
  static BigInt floor_rational(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
  }

  void merge() {
    std::vector<Rational> b{breakpoints_.front()};
    std::vector<Piece> p{pieces_.front()};
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
      if (pieces_[i] == p.back()) continue;
      b.push_back(breakpoints_[i]);
      p.push_back(pieces_[i]);
    }
    breakpoints_ = std::move(b);
    pieces_ = std::move(p);
  }

  std::vector<Rational> breakpoints_;
  std::vector<Piece> pieces_;
};

/// EXACT backend.
using PiecewiseFunction = Piecewise<Polynomial>;
/// NUMERIC backend.
using NumericFunction = Piecewise<NumericPiece>;

enum class Backend { exact, numeric };

/// t -> f(d*t mod 1).
template <class Piece>
Piecewise<Piece> dilate(const Piecewise<Piece>& f, int d) {
  if (d < 1) throw InvalidInput("dilation factor must be >= 1");
  if (d == 1) return f;
  return f.pullback(Rational(d), Rational(0));
}

/// L(f)(t) = (f(t/2) + f((t+1)/2)) / 2.
PiecewiseFunction transfer(const PiecewiseFunction& f);

/// L_ij(h)(t) = 1/2 sum_{s in {t/2, (t+1)/2}} exp(2 pi i (j-i) s) h(s): the
/// function with S_i^* h(z) S_j = L_ij(h)(z) for (m,n) = (1,2).
NumericFunction transfer(const NumericFunction& f, int i = 1, int j = 1);

PiecewiseFunction scale(const PiecewiseFunction& f, const Rational& c);
NumericFunction scale(const NumericFunction& f, std::complex<double> c);

/// Integral over [0,1).
Rational integrate(const PiecewiseFunction& f);

/// Winding number of exp(2 pi i f): requires degree <= 1 pieces and integer
/// jumps (including the wrap 1 -> 0). Throws InvalidInput("curve discontinuous").
BigInt winding(const PiecewiseFunction& f);

/// Maximal half-open intervals where f is not identically zero.
std::vector<std::pair<Rational, Rational>> support(const PiecewiseFunction& f);

/// Some t with f(t) != 0, or nullopt when f == 0.
std::optional<Rational> nonzero_witness(const PiecewiseFunction& f);

NumericFunction to_numeric(const PiecewiseFunction& f);
/// Pointwise sqrt of a nonnegative function.
NumericFunction numeric_sqrt(const PiecewiseFunction& f);

std::string to_string(const PiecewiseFunction& f);

}  // namespace omn
