#include "omn/entropy.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "omn/errors.hpp"

namespace omn {

std::int64_t norm_index(const Word& mu, int n) {
  std::int64_t total = 0, place = 1;
  for (int letter : mu) {
    total += (letter - 1) * place;
    place *= n;
  }
  return total;
}

std::int64_t omega_size(int s, int n) {
  std::int64_t words = 0;
  for (int a = 0; a <= s; ++a) words += ipow(n, a);
  return words * words * (2 * ipow(n, s) + 1);
}

std::vector<Word> words_of_length(int r, int n) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < r; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int letter = 1; letter <= n; ++letter) {
        Word v = w;
        v.push_back(letter);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Monomial> omega(int s, const AlgebraParams& params, std::size_t bound) {
  if (s < 0) throw InvalidInput("s must be >= 0");
  const int n = params.n();
  if (omega_size(s, n) > static_cast<std::int64_t>(bound))
    throw BoundExceeded("omega(" + std::to_string(s) + ") has " + std::to_string(omega_size(s, n)) +
                        " elements, above the bound " + std::to_string(bound));
  std::vector<Word> words;
  for (int a = 0; a <= s; ++a)
    for (auto& w : words_of_length(a, n)) words.push_back(std::move(w));
  const std::int64_t kmax = ipow(n, s);
  std::vector<Monomial> out;
  for (const auto& alpha : words)
    for (std::int64_t k = -kmax; k <= kmax; ++k)
      for (const auto& beta : words) out.push_back({alpha, k, beta});
  return out;
}

EntropyTable entropy_estimate(int s, int n_max, const AlgebraParams& params, std::size_t max_terms) {
  if (params.m() != 1) throw InvalidInput("entropy_estimate requires m = 1");
  if (n_max < 1) throw InvalidInput("nmax must be >= 1");
  EntropyTable table;
  table.m = params.m();
  table.n = params.n();
  table.s = s;

  std::vector<Element> current;
  for (const auto& mon : omega(s, params, max_terms)) current.emplace_back(mon);
  std::set<Monomial> terms;
  std::size_t d1 = 0;
  for (int N = 1; N <= n_max; ++N) {
    try {
      if (N > 1)
        for (auto& x : current) x = canonical_endo(x, params);
      for (const auto& x : current)
        for (const auto& [mon, c] : x.terms()) terms.insert(mon);
      if (terms.size() > max_terms)
        throw BoundExceeded("term count " + std::to_string(terms.size()) + " exceeds " + std::to_string(max_terms));
      std::vector<Element> basis(terms.begin(), terms.end());
      EntropyRow row;
      row.N = N;
      row.dimension = span_dimension(basis, params, max_terms);
      if (N == 1) d1 = row.dimension;
      row.log_dim_over_n = std::log(static_cast<double>(row.dimension)) / N;
      if (!table.rows.empty())
        row.slope = std::log(static_cast<double>(row.dimension)) -
                    std::log(static_cast<double>(table.rows.back().dimension));
      row.within_bound = static_cast<double>(row.dimension) <=
                         static_cast<double>(d1) * std::pow(static_cast<double>(params.n()), N);
      table.rows.push_back(row);
    } catch (const BoundExceeded& e) {
      table.partial = true;
      table.warning = "stopped at N = " + std::to_string(N) + ": " + e.what();
      break;
    }
  }
  if (table.rows.size() > 1) table.growth_rate = table.rows.back().slope;
  return table;
}

ElementMatrix rho_r_matrix(const Element& x, int r, const AlgebraParams& params) {
  const auto words = words_of_length(r, params.n());
  ElementMatrix out(words.size(), std::vector<Element>(words.size()));
  std::vector<Element> right;
  for (const auto& nu : words) right.push_back(mul(x, Element(Monomial{nu, 0, {}}), params));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Element left(Monomial{{}, 0, words[i]});
    for (std::size_t j = 0; j < words.size(); ++j) out[i][j] = mul(left, right[j], params);
  }
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput("rho_r hypothesis violated: " + what);
}

}  // namespace

RhoResult rho_r(const Monomial& mon, int r, int l, int s, int N, const AlgebraParams& params) {
  const std::int64_t n_s = ipow(params.n(), s);
  require(params.m() == 1, "m = 1");
  require(static_cast<int>(mon.mu.size()) <= s, "|alpha| <= s");
  require(static_cast<int>(mon.nu.size()) <= s, "|beta| <= s");
  require(std::llabs(mon.k) <= n_s, "|k| <= n^s");
  require(N + s <= r, "N + s <= r");
  require(1 <= l && l <= N, "1 <= l <= N");
  validate(mon, params);

  RhoResult result;
  result.matrix = rho_r_matrix(canonical_endo_power(Element(mon), l, params), r, params);
  ShapeReport& shape = result.shape;
  const std::size_t eta_plus = mon.mu.size() > mon.nu.size() ? mon.mu.size() - mon.nu.size() : 0;
  const std::size_t eta_minus = mon.nu.size() > mon.mu.size() ? mon.nu.size() - mon.mu.size() : 0;
  shape.q0_limit = n_s;

  // positions (i, j) of each S_eta z^q (or z^q S_eta^*)
  std::map<Monomial, std::vector<std::pair<std::size_t, std::size_t>>> pattern;
  const std::size_t size = result.matrix.size();
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (const auto& [term, c] : result.matrix[i][j].terms()) {
        if (term.mu.size() != eta_plus || term.nu.size() != eta_minus) {
          shape.entry_form = false;
          continue;
        }
        shape.exponents.insert(term.k);
        if (!(c == Scalar(1))) shape.partial_isometries = false;
        pattern[term].emplace_back(i, j);
      }
  if (!shape.exponents.empty()) {
    shape.q0 = *shape.exponents.begin();
    shape.at_most_two = shape.exponents.size() <= 2;
    shape.consecutive = *shape.exponents.rbegin() - shape.q0 <= 1;
    shape.q0_bounded = std::llabs(shape.q0) <= n_s;
  }
  for (const auto& [term, cells] : pattern) {
    std::set<std::size_t> rows, cols;
    for (const auto& [i, j] : cells)
      if (!rows.insert(i).second || !cols.insert(j).second) shape.partial_isometries = false;
  }
  return result;
}

}  // namespace omn
