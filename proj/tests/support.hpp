#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "omn/element.hpp"
#include "omn/monomial.hpp"
#include "omn/rational.hpp"

namespace omn::testing {

inline constexpr std::uint64_t seed = 20240601;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed + salt); }

inline int uniform(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline Word random_word(std::mt19937_64& g, int n, int max_len) {
  Word w(static_cast<std::size_t>(uniform(g, 0, max_len)));
  for (int& letter : w) letter = uniform(g, 1, n);
  return w;
}

inline Monomial random_monomial(std::mt19937_64& g, int n, int max_len = 2, int max_k = 4) {
  Monomial mon;
  mon.mu = random_word(g, n, max_len);
  mon.k = uniform(g, -max_k, max_k);
  mon.nu = random_word(g, n, max_len);
  return mon;
}

inline Element random_element(std::mt19937_64& g, int n, int terms = 3, int max_len = 2, int max_k = 4) {
  Element x;
  for (int i = 0; i < terms; ++i) x.add_term(random_monomial(g, n, max_len, max_k), Scalar(uniform(g, -3, 3)));
  return x;
}

// Direct model of the shift representation z e_q = e_{q+1},
// S_j e_q = e_{(n/m) q + j - 2}, built only from the generator formulas.
using Vec = std::map<Rational, Scalar, RationalLess>;

inline bool in_localized(const Rational& q, int m) {
  BigInt den = q.get_den();
  for (int p = 2; p <= m; ++p)
    if (m % p == 0)
      while (den % p == 0) den /= p;
  return den == 1;
}

inline std::optional<Rational> s_apply(int j, const Rational& q, const AlgebraParams& a) {
  return Rational(a.n(), a.m()) * q + (j - 2);
}

inline std::optional<Rational> s_star_apply(int j, const Rational& q, const AlgebraParams& a) {
  const Rational p = Rational(a.m(), a.n()) * (q - (j - 2));
  if (!in_localized(p, a.m())) return std::nullopt;
  return p;
}

inline Vec act(const Monomial& mon, const Vec& v, const AlgebraParams& a) {
  Vec out;
  for (const auto& [q0, c] : v) {
    std::optional<Rational> q = q0;
    for (int letter : mon.nu)
      if (q) q = s_star_apply(letter, *q, a);
    if (!q) continue;
    q = *q + mon.k;
    for (auto it = mon.mu.rbegin(); it != mon.mu.rend(); ++it) q = s_apply(*it, *q, a);
    out[*q] += c;
  }
  return out;
}

inline Vec act(const Element& x, const Vec& v, const AlgebraParams& a) {
  Vec out;
  for (const auto& [mon, c] : x.terms())
    for (const auto& [q, d] : act(mon, v, a)) out[q] += c * d;
  return out;
}

inline bool vec_zero(const Vec& v) {
  for (const auto& [q, c] : v)
    if (!c.is_zero()) return false;
  return true;
}

inline Vec basis(const Rational& q) { return Vec{{q, Scalar(1)}}; }

// Indices p/m^e with |p| <= bound and e <= exponent.
inline std::vector<Rational> probe_indices(const AlgebraParams& a, int bound, int exponent) {
  std::vector<Rational> out;
  BigInt den = 1;
  for (int e = 0; e <= exponent; ++e) {
    for (int p = -bound; p <= bound; ++p) {
      Rational q(BigInt(p), den);
      q.canonicalize();
      if (e == 0 || q.get_den() == den) out.push_back(q);
    }
    den *= a.m();
    if (a.m() == 1) break;
  }
  return out;
}

}  // namespace omn::testing
