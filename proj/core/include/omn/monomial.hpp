#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omn {

/// Parameters (m, n) of O_(m,n)(T): a unitary z and isometries S_1..S_n with
/// zS_i = S_{i+1} (i < n), zS_n = S_1 z^m and sum_i S_i S_i^* = 1.
class AlgebraParams {
 public:
  /// Throws InvalidInput unless m, n >= 1 and gcd(m, n) == 1.
  AlgebraParams(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  int m_;
  int n_;
};

/// Letters are 1-based indices into S_1..S_n; the empty word is S_emptyset = 1.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

/// Formal label S_mu z^k S_nu^*. Distinct triples are distinct spanning
/// elements but not linearly independent; equality is decided by is_zero.
struct Monomial {
  Word mu;
  std::int64_t k = 0;
  Word nu;

  static Monomial one() { return {}; }
  static Monomial z(std::int64_t power) { return {{}, power, {}}; }
  static Monomial s(int letter) { return {{letter}, 0, {}}; }
  static Monomial s_star(int letter) { return {{}, 0, {letter}}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& mon);

void validate(const Word& w, const AlgebraParams& params);
void validate(const Monomial& mon, const AlgebraParams& params);

/// z^k S_j = S_{j'} z^{k'}, with j' = ((j-1+k) mod n) + 1 and
/// k' = m * floor((j-1+k)/n). Throws InvalidInput for a bad letter.
std::pair<int, std::int64_t> shift_through(std::int64_t k, int j, const AlgebraParams& params);

/// z^k S_w = S_{w'} z^{k'} applied letter by letter.
std::pair<Word, std::int64_t> shift_through_word(std::int64_t k, const Word& w,
                                                 const AlgebraParams& params);

/// Product of two monomials in normal form; nullopt when the product is 0.
std::optional<Monomial> mul_monomials(const Monomial& a, const Monomial& b,
                                      const AlgebraParams& params);

/// (S_mu z^k S_nu^*)^* = S_nu z^{-k} S_mu^*.
Monomial adjoint(const Monomial& mon);

/// |mu| - |nu|; the gauge action scales the monomial by t^degree.
inline std::int64_t gauge_degree(const Monomial& mon) {
  return static_cast<std::int64_t>(mon.mu.size()) - static_cast<std::int64_t>(mon.nu.size());
}

Word concat(const Word& a, const Word& b);
bool is_prefix(const Word& prefix, const Word& w);

}  // namespace omn
