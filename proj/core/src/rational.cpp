#include "omn/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "omn/errors.hpp"

namespace omn {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw InvalidInput("not an integer literal: '" + std::string(s) + "'");
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return BigInt(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string pretty_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return format_rational(value);
}

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  const Rational norm = re * re + im * im;
  return {re / norm, -im / norm};
}

std::string to_string(const Scalar& s) {
  if (sgn(s.im) == 0) return pretty_rational(s.re);
  if (sgn(s.re) == 0) return pretty_rational(s.im) + "i";
  std::ostringstream os;
  os << "(" << pretty_rational(s.re) << (sgn(s.im) > 0 ? "+" : "-")
     << pretty_rational(abs(s.im)) << "i)";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

std::size_t RationalHash::operator()(const Rational& r) const {
  // gmp exposes no hash; the low limbs are enough for bucketing.
  const auto limb = [](const BigInt& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  std::size_t seed = limb(r.get_num()) ^ (static_cast<std::size_t>(sgn(r)) * 0x9e3779b97f4a7c15ULL);
  seed ^= limb(r.get_den()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

}  // namespace omn
