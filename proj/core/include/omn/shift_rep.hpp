#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omn/monomial.hpp"
#include "omn/rational.hpp"

namespace omn {

/// The two shift representations of O_(m,n)(T) on l^2(Z[1/m]) with basis e_q:
///   A: z e_q = e_{q+1}, S_1 e_q = e_{(n/m)q - 1}
///   B: z e_q = e_{q+1}, S_1 e_q = e_{(n/m)q}
enum class Variant { A, B };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

/// True iff q lies in Z[1/m] (every prime of the denominator divides m).
bool is_localized_index(const Rational& q, int m);

/// Total affine map q -> scale*q + offset.
struct AffineMap {
  Rational scale{1};
  Rational offset{0};

  Rational operator()(const Rational& q) const { return scale * q + offset; }
  AffineMap inverse() const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.scale == b.scale && a.offset == b.offset;
  }
};

/// outer(inner(q)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// The index map of S_w = S_{w_1}...S_{w_k} (rightmost letter acts first).
AffineMap word_map(const Word& w, Variant variant, const AlgebraParams& params);

/// Action of a monomial on basis indices: e_q -> e_{map(q)} when q lies in the
/// coset residue + modulus*Z[1/m] (the range of S_nu), otherwise e_q -> 0.
struct PartialAffineMap {
  AffineMap map;
  BigInt modulus{1};
  Rational residue{0};

  bool in_domain(const Rational& q, const AlgebraParams& params) const;
  std::optional<Rational> apply(const Rational& q, const AlgebraParams& params) const;
};

PartialAffineMap monomial_affine_map(const Monomial& mon, Variant variant, const AlgebraParams& params);

enum class CoincidenceKind { none, point, subdomain };

struct CoincidenceResult {
  CoincidenceKind kind = CoincidenceKind::none;
  std::optional<Rational> point;  // set when kind == point
};

/// Where the index maps of two distinct monomials agree and are both defined.
/// Distinct affine maps agree at most once; equal maps on overlapping domains are
/// reported as `subdomain` so callers can refine. Throws InvalidInput for a == b.
CoincidenceResult coincidence_points(const Monomial& a, const Monomial& b, Variant variant,
                                     const AlgebraParams& params);

/// Basis indices p/m^q with |p| <= max_abs_numerator and 0 <= q <= max_exponent.
struct IndexWindow {
  std::int64_t max_abs_numerator = 64;
  int max_exponent = 0;
};

std::vector<Rational> window_indices(const IndexWindow& window, const AlgebraParams& params);

struct RelationCheck {
  std::string relation;
  std::size_t instances = 0;
  std::size_t covered = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

struct RelationReport {
  Variant variant = Variant::A;
  IndexWindow window;
  std::vector<RelationCheck> checks;

  std::size_t violations() const;
  double coverage() const;
};

/// Applies both sides of every defining relation to each window index. Images may
/// leave the window (it grows adaptively) up to a fixed growth cap; instances
/// beyond the cap count as uncovered.
RelationReport relation_residuals(Variant variant, const AlgebraParams& params, const IndexWindow& window);

}  // namespace omn
