#include "omn/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "omn/errors.hpp"
#include "omn/rational.hpp"

namespace omn {

AlgebraParams::AlgebraParams(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1)
    throw InvalidInput("parameters must satisfy m >= 1 and n >= 1 (got m=" + std::to_string(m) +
                       ", n=" + std::to_string(n) + ")");
  if (std::gcd(m, n) != 1)
    throw InvalidInput("gcd(m, n) must be 1 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                       ")");
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (int letter : w) out += std::to_string(letter);
  return out;
}

std::string to_string(const Monomial& mon) {
  std::ostringstream os;
  bool any = false;
  if (!mon.mu.empty()) {
    os << "S_" << word_to_string(mon.mu);
    any = true;
  }
  if (mon.k != 0) {
    os << (any ? " " : "") << "z";
    if (mon.k != 1) os << "^" << mon.k;
    any = true;
  }
  if (!mon.nu.empty()) {
    os << (any ? " " : "") << "S_" << word_to_string(mon.nu) << "*";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

void validate(const Word& w, const AlgebraParams& params) {
  for (int letter : w)
    if (letter < 1 || letter > params.n())
      throw InvalidInput("letter " + std::to_string(letter) + " out of range 1.." +
                         std::to_string(params.n()));
}

void validate(const Monomial& mon, const AlgebraParams& params) {
  validate(mon.mu, params);
  validate(mon.nu, params);
}

std::pair<int, std::int64_t> shift_through(std::int64_t k, int j, const AlgebraParams& params) {
  if (j < 1 || j > params.n())
    throw InvalidInput("letter " + std::to_string(j) + " out of range 1.." + std::to_string(params.n()));
  const std::int64_t t = (j - 1) + k;
  const int letter = static_cast<int>(floor_mod(t, params.n())) + 1;
  return {letter, params.m() * floor_div(t, params.n())};
}

std::pair<Word, std::int64_t> shift_through_word(std::int64_t k, const Word& w,
                                                 const AlgebraParams& params) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    auto [moved, rest] = shift_through(k, letter, params);
    out.push_back(moved);
    k = rest;
  }
  return {std::move(out), k};
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

std::optional<Monomial> mul_monomials(const Monomial& a, const Monomial& b,
                                      const AlgebraParams& params) {
  // (S_mu1 z^k1 S_nu1^*)(S_mu2 z^k2 S_nu2^*): contract S_nu1^* S_mu2 letterwise,
  // then push the surviving z-power through whatever word is left over.
  if (a.nu.size() <= b.mu.size()) {
    if (!is_prefix(a.nu, b.mu)) return std::nullopt;
    const Word rest(b.mu.begin() + static_cast<std::ptrdiff_t>(a.nu.size()), b.mu.end());
    auto [moved, k] = shift_through_word(a.k, rest, params);
    return Monomial{concat(a.mu, moved), k + b.k, b.nu};
  }
  if (!is_prefix(b.mu, a.nu)) return std::nullopt;
  const Word rest(a.nu.begin() + static_cast<std::ptrdiff_t>(b.mu.size()), a.nu.end());
  // S_rest^* z^k2 = (z^{-k2} S_rest)^* = (S_rest' z^c)^* = z^{-c} S_rest'^*
  auto [moved, c] = shift_through_word(-b.k, rest, params);
  return Monomial{a.mu, a.k - c, concat(b.nu, moved)};
}

Monomial adjoint(const Monomial& mon) { return {mon.nu, -mon.k, mon.mu}; }

}  // namespace omn
