#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "omn/element.hpp"
#include "omn/monomial.hpp"

namespace omn {

/// ||mu|| = sum_i (mu_i - 1) n^{i-1}.
std::int64_t norm_index(const Word& mu, int n);

/// (sum_{a <= s} n^a)^2 (2 n^s + 1).
std::int64_t omega_size(int s, int n);

/// omega(s) = {S_a z^k S_b^* : |a|, |b| <= s, |k| <= n^s}. Throws BoundExceeded
/// if the set would exceed bound elements.
std::vector<Monomial> omega(int s, const AlgebraParams& params, std::size_t bound = 200000);

/// All words of length r over 1..n in lexicographic order.
std::vector<Word> words_of_length(int r, int n);

struct EntropyRow {
  int N = 0;
  std::size_t dimension = 0;
  double log_dim_over_n = 0;
  double slope = 0;  // log D_N - log D_{N-1}; 0 on the first row
  bool within_bound = true;  // D_N <= D_1 n^N
};

struct EntropyTable {
  int m = 1;
  int n = 2;
  int s = 0;
  std::vector<EntropyRow> rows;
  double growth_rate = 0;  // last slope
  bool partial = false;
  std::string warning;
};

/// D_N = dimension of the span of the monomial terms of Phi^l(x), x in omega(s),
/// 0 <= l < N. Requires m = 1. A resource overflow ends the table early with a warning.
EntropyTable entropy_estimate(int s, int n_max, const AlgebraParams& params, std::size_t max_terms = 200000);

using ElementMatrix = std::vector<std::vector<Element>>;

/// rho_r(x)_{mu,nu} = S_mu^* x S_nu over |mu| = |nu| = r.
ElementMatrix rho_r_matrix(const Element& x, int r, const AlgebraParams& params);

struct ShapeReport {
  std::set<std::int64_t> exponents;
  std::int64_t q0 = 0;
  std::int64_t q0_limit = 0;           // n^s
  bool entry_form = true;              // entries are S_eta z^q or z^q S_eta^*, |eta| = ||a| - |b||
  bool at_most_two = true;
  bool consecutive = true;
  bool q0_bounded = true;
  bool partial_isometries = true;      // 0/1 pattern of each S_eta z^q, one entry per row and column

  bool ok() const {
    return entry_form && at_most_two && consecutive && q0_bounded && partial_isometries;
  }
};

struct RhoResult {
  ElementMatrix matrix;
  ShapeReport shape;
};

/// rho_r(Phi^l(mon)) with the shape check x_0 (x) z^{q_0} + x_1 (x) z^{q_0 + 1}
/// (S_eta or S_eta^* factors when |a| != |b|; exponents read off the normal form).
/// Throws InvalidInput naming the violated hypothesis among m = 1, |a|, |b| <= s,
/// |k| <= n^s, N + s <= r, 1 <= l <= N.
RhoResult rho_r(const Monomial& mon, int r, int l, int s, int N, const AlgebraParams& params);

}  // namespace omn
