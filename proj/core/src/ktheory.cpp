#include "omn/ktheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "omn/errors.hpp"

namespace omn {

FGAbelianGroup FGAbelianGroup::free(int rank) {
  FGAbelianGroup g;
  g.free_rank = rank;
  return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(const BigInt& order) {
  FGAbelianGroup g;
  const BigInt o = abs(order);
  if (o == 0) g.free_rank = 1;
  else if (o > 1) g.torsion.push_back(o);
  return g;
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  FGAbelianGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  std::vector<BigInt> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  if (!orders.empty()) {
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    for (const auto& d : smith_normal_form(diag).diagonal())
      if (d > 1) out.torsion.push_back(d);
  }
  out.localized = a.localized;
  out.localized.insert(out.localized.end(), b.localized.begin(), b.localized.end());
  std::sort(out.localized.begin(), out.localized.end());
  return out;
}

std::string to_string(const FGAbelianGroup& g) {
  std::vector<std::string> parts;
  for (int i = 0; i < g.free_rank; ++i) parts.emplace_back("Z");
  for (const auto& t : g.torsion) parts.push_back("Z_" + t.get_str());
  for (const auto& d : g.localized) parts.push_back("Z[1/" + d.get_str() + "]");
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
  return os.str();
}

CokerKer coker_ker(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  const IntMatrix u_inv = inverse_unimodular(s.U);
  const auto diag = s.diagonal();
  CokerKer out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const BigInt d = i < diag.size() ? diag[i] : BigInt(0);
    if (d == 1) continue;
    if (d == 0) ++out.coker.free_rank;
    else out.coker.torsion.push_back(d);
    out.coker.generators.push_back({u_inv.column(i), d});
  }
  for (std::size_t j = s.rank(); j < m.cols(); ++j) {
    ++out.ker.free_rank;
    out.ker.generators.push_back({s.V.column(j), BigInt(0)});
  }
  return out;
}

namespace {

FGAbelianGroup splice(const FGAbelianGroup& coker, const FGAbelianGroup& ker) {
  // 0 -> coker -> K -> ker -> 0 splits because ker is free
  if (!ker.torsion.empty()) throw Error("non-free kernel in the six-term sequence; splitting is not justified");
  return direct_sum(coker, ker);
}

IntMatrix scalar_map(long value) { return IntMatrix{{value}}; }

}  // namespace

KGroups six_term_kgroups(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("six_term_kgroups needs m, n >= 1");
  if (std::gcd(m, n) != 1) throw InvalidInput("gcd(m, n) must be 1");
  // [X]_0 is multiplication by n on K_0(C(T)) = Z, [X]_1 by m on K_1(C(T)) = Z
  const CokerKer zero = coker_ker(scalar_map(1 - n));
  const CokerKer one = coker_ker(scalar_map(1 - m));
  KGroups k;
  k.K0 = splice(zero.coker, one.ker);
  k.K1 = splice(one.coker, zero.ker);
  return k;
}

CokerKer localized_coker_ker(const LocalizedMap& map) {
  if (map.d < 1) throw InvalidInput("localization denominator must be >= 1");
  CokerKer out;
  if (map.c == 1) {
    FGAbelianGroup whole;
    if (map.d == 1) whole.free_rank = 1;
    else whole.localized.push_back(map.d);
    out.coker = whole;
    out.ker = whole;
    return out;
  }
  // multiplication by a nonzero integer is injective; its cokernel on Z[1/d]
  // is Z/g where g is 1-c stripped of the primes dividing d
  BigInt g = abs(BigInt(1 - map.c));
  const BigInt d(map.d);
  for (;;) {
    BigInt common;
    mpz_gcd(common.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (common == 1) break;
    g /= common;
  }
  out.coker = FGAbelianGroup::cyclic(g);
  return out;
}

KGroups pv_dual_action_kgroups(int m, int n) {
  if (m < 1 || n < 1) throw InvalidInput("pv_dual_action_kgroups needs m, n >= 1");
  if (std::gcd(m, n) != 1) throw InvalidInput("gcd(m, n) must be 1");
  // id - beta_0^{-1} is 1 - n on Z[1/n], id - beta_1^{-1} is 1 - m on Z[1/m]
  const CokerKer zero = localized_coker_ker({n, n});
  const CokerKer one = localized_coker_ker({m, m});
  KGroups k;
  k.K0 = splice(zero.coker, one.ker);
  k.K1 = splice(one.coker, zero.ker);
  return k;
}

Parity parse_parity(const std::string& text) {
  if (text == "odd") return Parity::odd;
  if (text == "even") return Parity::even;
  throw InvalidInput("parity must be 'odd' or 'even', got '" + text + "'");
}

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

SymmetricFixedPointReport symmetric_fixed_point_kgroups(Parity parity, int n) {
  if (n < 2) throw InvalidInput("symmetric_fixed_point_kgroups needs n >= 2");
  SymmetricFixedPointReport r;
  r.parity = parity;
  r.n = n;
  const long nn = n;
  // [Y]_0(e0) = n e0; [Y]_0(e1) = e1 + (n-1) f; [Y]_0(e2) = n f, where
  // f = [(1 + w0 z0^m)/2]_0 is e1 for m even and e2 for m odd
  if (parity == Parity::even) {
    r.map = IntMatrix{{nn, 0, 0}, {0, nn, nn}, {0, 0, 0}};
  } else {
    r.map = IntMatrix{{nn, 0, 0}, {0, 1, 0}, {0, nn - 1, nn}};
  }
  r.id_minus_map = IntMatrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.id_minus_map(i, j) = (i == j ? 1 : 0) - r.map(i, j);
  r.smith = smith_normal_form(r.id_minus_map);
  const CokerKer ck = coker_ker(r.id_minus_map);
  // K_1(B) = 0, so K_0(O_Y) = coker and K_1(O_Y) = ker
  r.computed.K0 = ck.coker;
  r.computed.K1 = ck.ker;

  if (parity == Parity::odd) {
    r.stated.K0 = direct_sum(direct_sum(FGAbelianGroup::cyclic(n - 1), FGAbelianGroup::free(1)),
                             FGAbelianGroup::cyclic(n - 1));
    r.stated.K1 = FGAbelianGroup::free(1);
  } else {
    r.stated.K0 = FGAbelianGroup::cyclic(n - 1);
    r.stated.K1 = FGAbelianGroup();
  }
  r.K0_agrees = r.computed.K0.same_type(r.stated.K0);
  r.K1_agrees = r.computed.K1.same_type(r.stated.K1);
  if (!r.K0_agrees || !r.K1_agrees) {
    r.note = "disagreement: SNF of I - [Y]_0 gives K0 = " + to_string(r.computed.K0) + ", K1 = " +
             to_string(r.computed.K1) + "; stated K0 = " + to_string(r.stated.K0) + ", K1 = " +
             to_string(r.stated.K1);
  }
  return r;
}

}  // namespace omn
