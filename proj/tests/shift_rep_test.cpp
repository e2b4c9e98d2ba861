#include <gtest/gtest.h>

#include "omn/errors.hpp"
#include "omn/shift_rep.hpp"
#include "support.hpp"

namespace omn {
namespace {

const std::vector<AlgebraParams> kParams = {{1, 2}, {1, 3}, {2, 3}, {3, 2}, {2, 5}};

TEST(ShiftRep, LocalizedIndex) {
  EXPECT_TRUE(is_localized_index(Rational(5, 4), 2));
  EXPECT_FALSE(is_localized_index(Rational(5, 3), 2));
  EXPECT_TRUE(is_localized_index(Rational(1, 36), 6));
  EXPECT_FALSE(is_localized_index(Rational(1, 2), 1));
  EXPECT_TRUE(is_localized_index(Rational(-7), 1));
}

TEST(ShiftRep, ParseVariant) {
  EXPECT_EQ(parse_variant("A"), Variant::A);
  EXPECT_EQ(parse_variant("B"), Variant::B);
  EXPECT_THROW(parse_variant("C"), InvalidInput);
}

TEST(ShiftRep, WordMapOfGenerators) {
  const AlgebraParams a(2, 3);
  const AffineMap s1 = word_map({1}, Variant::A, a);
  EXPECT_EQ(s1.scale, Rational(3, 2));
  EXPECT_EQ(s1.offset, Rational(-1));
  const AffineMap s3b = word_map({3}, Variant::B, a);
  EXPECT_EQ(s3b.scale, Rational(3, 2));
  EXPECT_EQ(s3b.offset, Rational(2));
  const AffineMap s12 = word_map({1, 2}, Variant::A, a);
  EXPECT_EQ(s12, compose(s1, word_map({2}, Variant::A, a)));
  EXPECT_EQ(compose(s1, s1.inverse()), AffineMap{});
}

TEST(ShiftRep, MonomialMapsMatchGeneratorModel) {
  auto g = testing::rng(11);
  for (const auto& a : kParams) {
    const auto probes = testing::probe_indices(a, 15, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const Monomial mon = testing::random_monomial(g, a.n(), 3, 5);
      const PartialAffineMap f = monomial_affine_map(mon, Variant::A, a);
      for (const auto& q : probes) {
        const auto model = testing::act(mon, testing::basis(q), a);
        const auto got = f.apply(q, a);
        ASSERT_EQ(model.empty(), !got.has_value()) << to_string(mon) << " at " << q;
        if (got) {
          ASSERT_EQ(model.begin()->first, *got);
        }
      }
    }
  }
}

TEST(ShiftRep, VariantBIsConjugateShift) {
  // B(q) = A(q + c) - c with c = m/(n - m)
  const AlgebraParams a(1, 3);
  const Rational c(1, 2);
  auto g = testing::rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Monomial mon = testing::random_monomial(g, 3, 3, 4);
    const PartialAffineMap fa = monomial_affine_map(mon, Variant::A, a);
    const PartialAffineMap fb = monomial_affine_map(mon, Variant::B, a);
    EXPECT_EQ(fa.map.scale, fb.map.scale);
    EXPECT_EQ(fb.map(-c) + c, fa.map(Rational(0)));
  }
}

TEST(ShiftRep, CoincidencePoints) {
  const AlgebraParams a(1, 2);
  // S_1 S_1^* and 1 agree exactly on the range of S_1
  const auto sub = coincidence_points({{1}, 0, {1}}, Monomial::one(), Variant::A, a);
  EXPECT_EQ(sub.kind, CoincidenceKind::subdomain);
  // z and 1 never agree
  EXPECT_EQ(coincidence_points(Monomial::z(1), Monomial::one(), Variant::A, a).kind, CoincidenceKind::none);
  // S_1 and 1: 2q - 1 = q at q = 1
  const auto pt = coincidence_points(Monomial::s(1), Monomial::one(), Variant::A, a);
  ASSERT_EQ(pt.kind, CoincidenceKind::point);
  EXPECT_EQ(*pt.point, Rational(1));
  EXPECT_THROW(coincidence_points(Monomial::one(), Monomial::one(), Variant::A, a), InvalidInput);
}

TEST(ShiftRep, CoincidencePointsAreFixedPoints) {
  auto g = testing::rng(13);
  for (const auto& a : kParams)
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial x = testing::random_monomial(g, a.n());
      const Monomial y = testing::random_monomial(g, a.n());
      if (x == y) continue;
      const auto r = coincidence_points(x, y, Variant::A, a);
      if (r.kind != CoincidenceKind::point) continue;
      const auto fx = monomial_affine_map(x, Variant::A, a).apply(*r.point, a);
      const auto fy = monomial_affine_map(y, Variant::A, a).apply(*r.point, a);
      ASSERT_TRUE(fx && fy);
      ASSERT_EQ(*fx, *fy);
    }
}

TEST(ShiftRep, RelationsHoldInBothVariants) {
  for (const auto& a : kParams)
    for (Variant v : {Variant::A, Variant::B}) {
      const RelationReport r = relation_residuals(v, a, {64, 2});
      EXPECT_EQ(r.violations(), 0u) << to_string(v) << " (" << a.m() << "," << a.n() << ")";
      EXPECT_GE(r.coverage(), 0.95);
      EXPECT_FALSE(r.checks.empty());
    }
}

TEST(ShiftRep, WindowIndices) {
  const AlgebraParams a(2, 3);
  const auto w = window_indices({3, 1}, a);
  EXPECT_NE(std::find(w.begin(), w.end(), Rational(-3, 2)), w.end());
  EXPECT_NE(std::find(w.begin(), w.end(), Rational(3)), w.end());
  for (const auto& q : w) EXPECT_TRUE(is_localized_index(q, 2));
}

}  // namespace
}  // namespace omn
