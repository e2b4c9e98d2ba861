#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>

#include "omn/errors.hpp"
#include "omn/group_actions.hpp"
#include "support.hpp"

namespace omn {
namespace {

const std::vector<AlgebraParams> kParams = {{1, 3}, {2, 5}, {3, 5}, {1, 4}, {5, 2}};

// z -> t z, S_1 -> S_1 sends S_j to t^{j-1} S_j.
std::int64_t weight_oracle(const Monomial& mon, const AlgebraParams& a) {
  const std::int64_t d = std::llabs(a.n() - a.m());
  std::int64_t w = mon.k;
  for (int letter : mon.mu) w += letter - 1;
  for (int letter : mon.nu) w -= letter - 1;
  return floor_mod(w, d);
}

Monomial random_fixed_monomial(std::mt19937_64& g, const AlgebraParams& a) {
  for (;;) {
    const Monomial mon = testing::random_monomial(g, a.n(), 3, 12);
    if (weight_oracle(mon, a) == 0) return mon;
  }
}

TEST(Beta, WeightMatchesOracle) {
  auto g = testing::rng(41);
  for (const auto& a : kParams)
    for (int trial = 0; trial < 300; ++trial) {
      const Monomial mon = testing::random_monomial(g, a.n(), 3, 9);
      ASSERT_EQ(beta_weight(mon, a), weight_oracle(mon, a));
    }
  EXPECT_THROW(beta_weight(Monomial::one(), AlgebraParams(1, 2)), InvalidInput);
  EXPECT_THROW(beta_weight(Monomial::one(), AlgebraParams(3, 2)), InvalidInput);
}

TEST(Beta, WeightIsAdditive) {
  auto g = testing::rng(42);
  for (const auto& a : kParams) {
    const std::int64_t d = std::llabs(a.n() - a.m());
    for (int trial = 0; trial < 300; ++trial) {
      const Monomial x = testing::random_monomial(g, a.n());
      const Monomial y = testing::random_monomial(g, a.n());
      const auto xy = mul_monomials(x, y, a);
      if (!xy) continue;
      ASSERT_EQ(beta_weight(*xy, a), floor_mod(beta_weight(x, a) + beta_weight(y, a), d));
    }
  }
}

TEST(FixedPoint, RoundTrip) {
  auto g = testing::rng(43);
  for (const auto& a : kParams) {
    const std::int64_t d = std::llabs(a.n() - a.m());
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial mon = random_fixed_monomial(g, a);
      ASSERT_TRUE(fixed_point_test(mon, a));
      const GeneratorWord w = fixed_point_rewrite(mon, a);
      for (const auto& t : w)
        if (t.kind == TokenKind::power) {
          ASSERT_EQ(t.exponent % d, 0) << to_string(w);
        }
      ASSERT_TRUE(equal_in_algebra(expand(w, a), Element(mon), a)) << to_string(mon) << " -> " << to_string(w);
    }
  }
}

TEST(FixedPoint, RejectsNonzeroWeight) {
  const AlgebraParams a(1, 3);
  EXPECT_FALSE(fixed_point_test(Monomial::z(1), a));
  EXPECT_THROW(fixed_point_rewrite(Monomial::z(1), a), InvalidInput);
  EXPECT_TRUE(fixed_point_test(Monomial::z(2), a));
}

TEST(FixedPoint, Example) {
  const AlgebraParams a(1, 3);
  const GeneratorWord w = fixed_point_rewrite({{2}, 1, {1}}, a);
  EXPECT_EQ(to_string(w), "[Z(4), CREATE, Z(0), ANNIHILATE, Z(0)]");
  EXPECT_TRUE(equal_in_algebra(expand(w, a), parse_expression("S_2 z S_1*", a), a));
}

TEST(Sigma, InvolutiveHomomorphism) {
  auto g = testing::rng(44);
  for (const auto& a : std::vector<AlgebraParams>{{1, 2}, {2, 3}, {3, 2}, {1, 3}}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Element x = testing::random_element(g, a.n(), 2);
      const Element y = testing::random_element(g, a.n(), 2);
      ASSERT_TRUE(equal_in_algebra(sigma_apply(sigma_apply(x, a), a), x, a));
      ASSERT_TRUE(equal_in_algebra(sigma_apply(mul(x, y, a), a), mul(sigma_apply(x, a), sigma_apply(y, a), a), a));
      ASSERT_TRUE(equal_in_algebra(sigma_apply(adjoint(x), a), adjoint(sigma_apply(x, a)), a));
    }
    EXPECT_TRUE(equal_in_algebra(sigma_apply(cuntz_sum(a), a), Element::one(), a));
    EXPECT_TRUE(equal_in_algebra(sigma_apply(Element(Monomial::z(1)), a), Element(Monomial::z(-1)), a));
  }
}

TEST(Subalgebra, PowerWitness) {
  for (const auto& a : std::vector<AlgebraParams>{{1, 2}, {2, 3}, {3, 2}, {1, 3}})
    for (int k = 1; k <= 3; ++k) {
      if (ipow(a.n(), k) > 27) continue;
      const WitnessReport r = subalgebra_witness_power(k, a);
      EXPECT_TRUE(r.all_pass()) << a.m() << "," << a.n() << " k=" << k;
      EXPECT_EQ(r.relations.size(), 4u);
      // independent check of sum S~_j S~_j^* = 1
      Element sum;
      const Word power(static_cast<std::size_t>(k), 1);
      for (std::int64_t j = 0; j < ipow(a.n(), k); ++j) {
        const Element s = mul(Element(Monomial::z(j)), Element(Monomial{power, 0, {}}), a);
        sum += mul(s, adjoint(s), a);
      }
      EXPECT_TRUE(equal_in_algebra(sum, Element::one(), a));
    }
  EXPECT_THROW(subalgebra_witness_power(7, AlgebraParams(1, 2)), BoundExceeded);
}

TEST(Subalgebra, ZkWitness) {
  for (const auto& a : std::vector<AlgebraParams>{{1, 2}, {2, 3}, {3, 2}, {1, 3}, {3, 4}})
    for (int k = 1; k <= 6; ++k) {
      const WitnessReport r = subalgebra_witness_zk(k, a);
      EXPECT_TRUE(r.all_pass()) << a.m() << "," << a.n() << " k=" << k;
      EXPECT_EQ(std::gcd(r.effective_k, static_cast<std::int64_t>(a.n())), 1);
      EXPECT_EQ(r.k, k);
      std::int64_t current = k;
      for (const auto& step : r.reductions) {
        EXPECT_TRUE(step.verified);
        EXPECT_EQ(step.k_before, current);
        EXPECT_EQ(a.n() % step.prime, 0);
        current = step.k_after;
      }
      EXPECT_EQ(current, r.effective_k);
      if (std::gcd(k, a.n()) == 1) {
        EXPECT_TRUE(r.reductions.empty());
      }
    }
}

TEST(Subalgebra, ReductionExample) {
  const WitnessReport r = subalgebra_witness_zk(4, AlgebraParams(1, 2));
  ASSERT_EQ(r.reductions.size(), 2u);
  EXPECT_EQ(r.reductions[0].k_after, 2);
  EXPECT_EQ(r.effective_k, 1);
}

}  // namespace
}  // namespace omn
