#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omn/element.hpp"
#include "omn/monomial.hpp"

namespace omn {

/// Weight of S_mu z^k S_nu^* under beta_t (z -> tz, S_1 -> S_1, t in Z_|n-m|):
/// sum(mu_i - 1) + k - sum(nu_j - 1) mod |n-m|, as a residue in [0, |n-m|).
/// Throws InvalidInput when |n-m| <= 1.
std::int64_t beta_weight(const Monomial& mon, const AlgebraParams& params);

/// The symmetry z -> z^{-1}, S_1 -> S_1 extended multiplicatively.
Element sigma_apply(const Element& x, const AlgebraParams& params);

enum class TokenKind { power, create, annihilate };

/// Z(e) = z^e, CREATE = S_1, ANNIHILATE = S_1^*.
struct GenToken {
  TokenKind kind = TokenKind::power;
  std::int64_t exponent = 0;

  friend bool operator==(const GenToken&, const GenToken&) = default;
};

using GeneratorWord = std::vector<GenToken>;

std::string to_string(const GeneratorWord& w);

bool fixed_point_test(const Monomial& mon, const AlgebraParams& params);

/// Writes a beta-fixed monomial as a word in z^{|n-m|}, S_1, S_1^*; the
/// auxiliary integers p_i, q_j are least nonnegative residues. Throws
/// InvalidInput("not in fixed-point algebra") for nonzero weight.
GeneratorWord fixed_point_rewrite(const Monomial& mon, const AlgebraParams& params);

/// Multiplies the tokens out into normal form.
Element expand(const GeneratorWord& w, const AlgebraParams& params);

struct RelationStatus {
  std::string relation;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

/// One step z^k -> z^{k'} of the gcd(k, n) reduction, witnessed by
/// S_1^* z^{a n} S_1 = z^{a m}.
struct ReductionStep {
  int prime = 0;
  std::int64_t k_before = 0;
  std::int64_t k_after = 0;
  std::int64_t a = 0;
  bool verified = false;
};

struct WitnessReport {
  std::int64_t k = 0;
  std::int64_t effective_k = 0;
  std::vector<RelationStatus> relations;
  std::vector<ReductionStep> reductions;
  std::vector<std::pair<std::int64_t, std::int64_t>> l_table;  // (l_q, p_q)

  bool all_pass() const;
};

/// S~_j = z^{j-1} S_1^k, j = 1..n^k: checks z S~_i = S~_{i+1}, z S~_{n^k} = S~_1 z^{m^k},
/// S~_i^* S~_j = delta_ij and sum S~_i S~_i^* = 1. Throws BoundExceeded if n^k > bound.
WitnessReport subalgebra_witness_power(int k, const AlgebraParams& params, std::int64_t bound = 81);

/// S~_q = z^{(q-1)k} S_1 with w = z^k after reducing to gcd(k, n) = 1: checks
/// w S~_i = S~_{i+1}, w S~_n = S~_1 w^m, S~_i^* S~_j = delta_ij, sum S~_q S~_q^* = 1.
WitnessReport subalgebra_witness_zk(int k, const AlgebraParams& params, std::int64_t bound = 81);

}  // namespace omn
