#include "omn/shift_rep.hpp"

#include <algorithm>
#include <set>

#include "omn/errors.hpp"

namespace omn {

std::string to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

Variant parse_variant(const std::string& text) {
  if (text == "A" || text == "a") return Variant::A;
  if (text == "B" || text == "b") return Variant::B;
  throw InvalidInput("unknown representation variant '" + text + "' (expected A or B)");
}

bool is_localized_index(const Rational& q, int m) {
  BigInt den = q.get_den();
  if (m == 1) return den == 1;
  const BigInt base(m);
  while (den != 1) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return false;
    den /= g;
  }
  return true;
}

AffineMap AffineMap::inverse() const {
  AffineMap inv;
  inv.scale = 1 / scale;
  inv.offset = -offset / scale;
  return inv;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  AffineMap out;
  out.scale = outer.scale * inner.scale;
  out.offset = outer.scale * inner.offset + outer.offset;
  return out;
}

namespace {

AffineMap letter_map(int letter, Variant variant, const AlgebraParams& params) {
  // S_i = z^{i-1} S_1
  AffineMap s;
  s.scale = Rational(params.n(), params.m());
  s.scale.canonicalize();
  s.offset = Rational(variant == Variant::A ? letter - 2 : letter - 1);
  return s;
}

BigInt power(int base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

AffineMap word_map(const Word& w, Variant variant, const AlgebraParams& params) {
  validate(w, params);
  AffineMap acc;
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = compose(letter_map(*it, variant, params), acc);
  return acc;
}

bool PartialAffineMap::in_domain(const Rational& q, const AlgebraParams& params) const {
  if (!is_localized_index(q, params.m())) return false;
  // (q - residue)/modulus must stay in Z[1/m]; gcd(n, m) = 1 reduces this to
  // divisibility of the numerator.
  Rational diff = q - residue;
  return mpz_divisible_p(diff.get_num().get_mpz_t(), modulus.get_mpz_t()) != 0;
}

std::optional<Rational> PartialAffineMap::apply(const Rational& q, const AlgebraParams& params) const {
  if (!in_domain(q, params)) return std::nullopt;
  return map(q);
}

PartialAffineMap monomial_affine_map(const Monomial& mon, Variant variant, const AlgebraParams& params) {
  validate(mon, params);
  const AffineMap left = word_map(mon.mu, variant, params);
  const AffineMap right = word_map(mon.nu, variant, params);
  AffineMap shift;
  shift.offset = Rational(mon.k);
  PartialAffineMap out;
  out.map = compose(left, compose(shift, right.inverse()));
  out.modulus = power(params.n(), mon.nu.size());
  out.residue = right.offset;
  return out;
}

CoincidenceResult coincidence_points(const Monomial& a, const Monomial& b, Variant variant,
                                     const AlgebraParams& params) {
  if (a == b) throw InvalidInput("coincidence_points needs distinct monomials, got " + to_string(a) + " twice");
  const PartialAffineMap fa = monomial_affine_map(a, variant, params);
  const PartialAffineMap fb = monomial_affine_map(b, variant, params);
  CoincidenceResult result;
  if (fa.map.scale != fb.map.scale) {
    const Rational q = (fb.map.offset - fa.map.offset) / (fa.map.scale - fb.map.scale);
    if (fa.in_domain(q, params) && fb.in_domain(q, params)) {
      result.kind = CoincidenceKind::point;
      result.point = q;
    }
    return result;
  }
  if (fa.map.offset != fb.map.offset) return result;
  // Same affine map: the domains are cosets of n^|nu| Z[1/m]; nested or disjoint.
  const bool overlap = fa.modulus <= fb.modulus ? fa.in_domain(fb.residue, params)
                                                : fb.in_domain(fa.residue, params);
  if (overlap) result.kind = CoincidenceKind::subdomain;
  return result;
}

std::vector<Rational> window_indices(const IndexWindow& window, const AlgebraParams& params) {
  std::set<Rational, RationalLess> seen;
  BigInt den = 1;
  const int exponents = params.m() == 1 ? 0 : window.max_exponent;
  for (int e = 0; e <= exponents; ++e) {
    for (std::int64_t p = -window.max_abs_numerator; p <= window.max_abs_numerator; ++p) {
      Rational q(BigInt(static_cast<long>(p)), den);
      q.canonicalize();
      seen.insert(q);
    }
    den *= params.m();
  }
  return {seen.begin(), seen.end()};
}

std::size_t RelationReport::violations() const {
  std::size_t v = 0;
  for (const auto& c : checks) v += c.violations;
  return v;
}

double RelationReport::coverage() const {
  std::size_t total = 0, covered = 0;
  for (const auto& c : checks) {
    total += c.instances;
    covered += c.covered;
  }
  return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
}

namespace {

/// Tracks whether the indices an instance touches stay inside the grown window.
class GrowthCap {
 public:
  GrowthCap(const IndexWindow& window, const AlgebraParams& params)
      : max_abs_(static_cast<long>(64 * (window.max_abs_numerator + params.n() + params.m()))),
        max_exponent_(window.max_exponent + 4),
        m_(params.m()) {}

  bool admits(const Rational& q) const {
    if (abs(q) > max_abs_) return false;
    if (m_ == 1) return true;
    BigInt den = q.get_den();
    int e = 0;
    while (den != 1) {
      if (!mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(m_))) return false;
      den /= m_;
      ++e;
    }
    return e <= max_exponent_;
  }

 private:
  Rational max_abs_;
  int max_exponent_;
  int m_;
};

std::string describe(const Rational& q) { return "e_" + pretty_rational(q); }

}  // namespace

RelationReport relation_residuals(Variant variant, const AlgebraParams& params, const IndexWindow& window) {
  RelationReport report;
  report.variant = variant;
  report.window = window;
  const int n = params.n();
  const auto indices = window_indices(window, params);
  const GrowthCap cap(window, params);

  auto s = [&](int i) { return monomial_affine_map(Monomial::s(i), variant, params); };
  auto s_star = [&](int i) { return monomial_affine_map(Monomial::s_star(i), variant, params); };

  auto record = [](RelationCheck& check, bool covered, bool ok, const std::string& what) {
    ++check.instances;
    if (!covered) return;
    ++check.covered;
    if (!ok) {
      if (check.violations == 0) check.first_violation = what;
      ++check.violations;
    }
  };

  // z S_i = S_{i+1}, i < n
  {
    RelationCheck check;
    check.relation = "z S_i = S_{i+1}";
    for (int i = 1; i < n; ++i) {
      const auto si = s(i), si1 = s(i + 1);
      for (const auto& q : indices) {
        const Rational lhs = si.map(q) + 1;
        const Rational rhs = si1.map(q);
        record(check, cap.admits(lhs) && cap.admits(rhs), lhs == rhs,
               "i=" + std::to_string(i) + " at " + describe(q));
      }
    }
    report.checks.push_back(check);
  }
  // z S_n = S_1 z^m
  {
    RelationCheck check;
    check.relation = "z S_n = S_1 z^m";
    const auto sn = s(n), s1 = s(1);
    for (const auto& q : indices) {
      const Rational lhs = sn.map(q) + 1;
      const Rational shifted = q + params.m();
      const Rational rhs = s1.map(shifted);
      record(check, cap.admits(lhs) && cap.admits(shifted) && cap.admits(rhs), lhs == rhs, "at " + describe(q));
    }
    report.checks.push_back(check);
  }
  // S_i^* S_j = delta_ij
  {
    RelationCheck check;
    check.relation = "S_i^* S_j = delta_ij";
    for (int i = 1; i <= n; ++i) {
      const auto si_star = s_star(i);
      for (int j = 1; j <= n; ++j) {
        const auto sj = s(j);
        for (const auto& q : indices) {
          const Rational mid = sj.map(q);
          const auto back = si_star.apply(mid, params);
          const bool ok = (i == j) ? (back && *back == q) : !back.has_value();
          record(check, cap.admits(mid), ok,
                 "i=" + std::to_string(i) + ", j=" + std::to_string(j) + " at " + describe(q));
        }
      }
    }
    report.checks.push_back(check);
  }
  // sum_i S_i S_i^* = 1: the ranges of the S_i partition the index set.
  {
    RelationCheck check;
    check.relation = "sum_i S_i S_i^* = 1";
    for (const auto& q : indices) {
      int hits = 0;
      bool fixed = true;
      bool covered = true;
      for (int i = 1; i <= n; ++i) {
        const auto pre = s_star(i).apply(q, params);
        if (!pre) continue;
        ++hits;
        covered = covered && cap.admits(*pre);
        fixed = fixed && s(i).map(*pre) == q;
      }
      record(check, covered, hits == 1 && fixed, "at " + describe(q) + " (" + std::to_string(hits) + " ranges)");
    }
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace omn
