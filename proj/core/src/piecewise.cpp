#include "omn/piecewise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace omn {

namespace {

using Complex = std::complex<double>;
using CPoly = std::vector<Complex>;

void trim(CPoly& p) {
  while (!p.empty() && p.back() == Complex(0.0)) p.pop_back();
}

CPoly to_cpoly(const Polynomial& p) {
  CPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_d(), 0.0);
  return out;
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

CPoly cpoly_compose_affine(const CPoly& p, double a, double b) {
  const CPoly inner{Complex(b), Complex(a)};
  CPoly acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = cpoly_mul(acc, inner);
    if (acc.empty()) acc.resize(1);
    acc[0] += *it;
  }
  trim(acc);
  return acc;
}

Complex cpoly_eval(const CPoly& p, double t) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// exp(2 pi i x), reducing x mod 1 exactly first.
Complex unit_phase(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  const double frac = Rational(x - Rational(q)).get_d();
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

bool same_shape(const NumericTerm& a, const NumericTerm& b) {
  return a.frequency == b.frequency && a.radicands == b.radicands;
}

bool shape_less(const NumericTerm& a, const NumericTerm& b) {
  if (a.frequency != b.frequency) return a.frequency < b.frequency;
  return std::lexicographical_compare(a.radicands.begin(), a.radicands.end(), b.radicands.begin(),
                                      b.radicands.end());
}

}  // namespace

Complex NumericTerm::operator()(const Rational& t) const {
  Complex value = cpoly_eval(coeffs, t.get_d());
  if (sgn(frequency) != 0) value *= unit_phase(frequency * t);
  for (const auto& q : radicands) value *= std::sqrt(std::max(0.0, q(t).get_d()));
  return value;
}

NumericPiece::NumericPiece(Complex constant) {
  if (constant != Complex(0.0)) terms_.push_back({{constant}, Rational(0), {}});
}

NumericPiece::NumericPiece(const Polynomial& p) {
  if (!p.is_zero()) terms_.push_back({to_cpoly(p), Rational(0), {}});
}

NumericPiece NumericPiece::sqrt_of(const Polynomial& p) {
  NumericPiece out;
  if (!p.is_zero()) out.terms_.push_back({{Complex(1.0)}, Rational(0), {p}});
  return out;
}

NumericPiece NumericPiece::phase(const Rational& frequency) {
  NumericPiece out;
  out.terms_.push_back({{Complex(1.0)}, frequency, {}});
  return out;
}

Complex NumericPiece::operator()(const Rational& t) const {
  Complex total = 0.0;
  for (const auto& term : terms_) total += term(t);
  return total;
}

void NumericPiece::add_term(NumericTerm term) {
  trim(term.coeffs);
  if (term.coeffs.empty()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term, shape_less);
  if (it != terms_.end() && same_shape(*it, term)) {
    if (it->coeffs.size() < term.coeffs.size()) it->coeffs.resize(term.coeffs.size());
    for (std::size_t i = 0; i < term.coeffs.size(); ++i) it->coeffs[i] += term.coeffs[i];
    trim(it->coeffs);
    if (it->coeffs.empty()) terms_.erase(it);
    return;
  }
  terms_.insert(it, std::move(term));
}

NumericPiece NumericPiece::compose_affine(const Rational& a, const Rational& b) const {
  NumericPiece out;
  for (const auto& term : terms_) {
    NumericTerm t;
    t.coeffs = cpoly_compose_affine(term.coeffs, a.get_d(), b.get_d());
    if (sgn(term.frequency) != 0) {
      const Complex shift = unit_phase(term.frequency * b);
      for (auto& c : t.coeffs) c *= shift;
    }
    t.frequency = term.frequency * a;
    for (const auto& q : term.radicands) t.radicands.push_back(q.compose_affine(a, b));
    std::sort(t.radicands.begin(), t.radicands.end());
    out.add_term(std::move(t));
  }
  return out;
}

NumericPiece NumericPiece::conj() const {
  NumericPiece out;
  for (const auto& term : terms_) {
    NumericTerm t = term;
    for (auto& c : t.coeffs) c = std::conj(c);
    t.frequency = -t.frequency;
    out.add_term(std::move(t));
  }
  return out;
}

NumericPiece& NumericPiece::operator+=(const NumericPiece& o) {
  for (const auto& term : o.terms_) add_term(term);
  return *this;
}

NumericPiece operator*(const NumericPiece& a, const NumericPiece& b) {
  NumericPiece out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      NumericTerm t;
      t.coeffs = cpoly_mul(x.coeffs, y.coeffs);
      t.frequency = x.frequency + y.frequency;
      // sqrt(q) * sqrt(q) = q exactly
      std::vector<Polynomial> rads = x.radicands;
      rads.insert(rads.end(), y.radicands.begin(), y.radicands.end());
      std::sort(rads.begin(), rads.end());
      for (std::size_t i = 0; i < rads.size();) {
        if (i + 1 < rads.size() && rads[i] == rads[i + 1]) {
          t.coeffs = cpoly_mul(t.coeffs, to_cpoly(rads[i]));
          i += 2;
        } else {
          t.radicands.push_back(rads[i]);
          ++i;
        }
      }
      out.add_term(std::move(t));
    }
  }
  return out;
}

bool operator==(const NumericPiece& a, const NumericPiece& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!same_shape(a.terms_[i], b.terms_[i]) || a.terms_[i].coeffs != b.terms_[i].coeffs) return false;
  }
  return true;
}

PiecewiseFunction transfer(const PiecewiseFunction& f) {
  const Rational half(1, 2);
  return scale(f.pullback(half, 0) + f.pullback(half, half), half);
}

NumericFunction transfer(const NumericFunction& f, int i, int j) {
  const Rational half(1, 2);
  const Rational c(j - i);
  // exp(2 pi i c s) with s = (t + branch)/2
  const auto twist = [&](int branch) {
    NumericPiece p = NumericPiece::phase(c * half);
    return NumericFunction::constant(p * NumericPiece(unit_phase(c * half * branch)));
  };
  const NumericFunction low = f.pullback(half, 0) * twist(0);
  const NumericFunction high = f.pullback(half, half) * twist(1);
  return scale(low + high, Complex(0.5));
}

PiecewiseFunction scale(const PiecewiseFunction& f, const Rational& c) {
  return f * PiecewiseFunction::constant(Polynomial(c));
}

NumericFunction scale(const NumericFunction& f, Complex c) { return f * NumericFunction::constant(NumericPiece(c)); }

Rational integrate(const PiecewiseFunction& f) {
  Rational total = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    total += f.pieces()[i].integrate(f.breakpoints()[i], f.interval_end(i));
  return total;
}

BigInt winding(const PiecewiseFunction& f) {
  Rational total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Polynomial& p = f.pieces()[i];
    if (p.degree() > 1) throw InvalidInput("winding needs a piecewise linear function");
    const Rational hi = f.interval_end(i);
    total += p(hi) - p(f.breakpoints()[i]);
    const Rational next = i + 1 < f.size() ? f.pieces()[i + 1](hi) : f.pieces()[0](Rational(0));
    const Rational jump = next - p(hi);
    if (jump.get_den() != 1)
      throw InvalidInput("curve discontinuous: jump " + pretty_rational(jump) + " at t=" + pretty_rational(hi));
  }
  if (total.get_den() != 1) throw InvalidInput("curve discontinuous: non-integer net change");
  return total.get_num();
}

std::vector<std::pair<Rational, Rational>> support(const PiecewiseFunction& f) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.pieces()[i].is_zero()) continue;
    const Rational lo = f.breakpoints()[i], hi = f.interval_end(i);
    if (!out.empty() && out.back().second == lo) out.back().second = hi;
    else out.emplace_back(lo, hi);
  }
  return out;
}

std::optional<Rational> nonzero_witness(const PiecewiseFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Polynomial& p = f.pieces()[i];
    if (p.is_zero()) continue;
    const Rational lo = f.breakpoints()[i], width = f.interval_end(i) - lo;
    // a nonzero polynomial of degree d has at most d roots
    for (int k = 1; k <= p.degree() + 2; ++k) {
      const Rational t = lo + width * Rational(k, p.degree() + 3);
      if (sgn(p(t)) != 0) return t;
    }
  }
  return std::nullopt;
}

NumericFunction to_numeric(const PiecewiseFunction& f) {
  std::vector<NumericPiece> pieces;
  for (const auto& p : f.pieces()) pieces.emplace_back(p);
  return NumericFunction(f.breakpoints(), std::move(pieces));
}

NumericFunction numeric_sqrt(const PiecewiseFunction& f) {
  std::vector<NumericPiece> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(NumericPiece::sqrt_of(p));
  return NumericFunction(f.breakpoints(), std::move(pieces));
}

std::string to_string(const PiecewiseFunction& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << "; ";
    os << "[" << pretty_rational(f.breakpoints()[i]) << "," << pretty_rational(f.interval_end(i))
       << "): " << to_string(f.pieces()[i]);
  }
  return os.str();
}

}  // namespace omn
