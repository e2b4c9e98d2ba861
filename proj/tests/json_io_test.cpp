#include <gtest/gtest.h>

#include "omn/errors.hpp"
#include "omn/json_io.hpp"
#include "omn/rieffel.hpp"
#include "support.hpp"

namespace omn {
namespace {

TEST(Json, Rationals) {
  EXPECT_EQ(rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(rational_from_json(Json("-7/16")), Rational(-7, 16));
  EXPECT_EQ(rational_from_json(Json("4/6")), Rational(2, 3));
  EXPECT_THROW(rational_from_json(Json(0.5)), InvalidInput);
  EXPECT_THROW(rational_from_json(Json("1/0")), InvalidInput);
  EXPECT_THROW(rational_from_json(Json("1.5")), InvalidInput);
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
}

TEST(Json, ElementRoundTrip) {
  auto g = testing::rng(71);
  const AlgebraParams a(2, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Element x = testing::random_element(g, 3, 4);
    x.add_term(testing::random_monomial(g, 3), Scalar(Rational(1, 3), Rational(-2, 7)));
    const Json j = to_json(x);
    ASSERT_EQ(element_from_json(Json::parse(j.dump()), a), x);
  }
}

TEST(Json, ElementDefaultsAndErrors) {
  const AlgebraParams a(1, 2);
  const Element x = element_from_json(Json::parse(R"([{"mu":[1],"k":2}])"), a);
  EXPECT_EQ(x, Element(Monomial{{1}, 2, {}}));
  EXPECT_THROW(element_from_json(Json::parse(R"([{"mu":[3]}])"), a), InvalidInput);
  EXPECT_THROW(element_from_json(Json::parse(R"({"mu":[1]})"), a), InvalidInput);
  EXPECT_THROW(element_from_json(Json::parse(R"([{"k":"x"}])"), a), InvalidInput);
  EXPECT_THROW(element_from_json(Json::parse(R"([{"coeff":"2"}])"), a), InvalidInput);
  EXPECT_EQ(element_from_json(Json::parse(R"([{"im":"1/2"}])"), a), Scalar(Rational(0), Rational(1, 2)) * Element(Monomial::one()));
  EXPECT_EQ(monomial_from_json(Json::parse(R"({"mu":[2],"k":-1,"nu":[1,1]})"), a), (Monomial{{2}, -1, {1, 1}}));
}

TEST(Json, FunctionRoundTripAndBackends) {
  const ProjectionData d = build_canonical_data();
  for (const auto& f : {d.a0, d.b0, d.a1sq, d.b1sq}) {
    const Json j = to_json(f);
    EXPECT_EQ(j.at("backend"), "exact");
    EXPECT_EQ(function_from_json(j), f);
  }
  Json numeric = to_json(d.a0);
  EXPECT_THROW(numeric_function_from_json(numeric), InvalidInput);
  numeric["backend"] = "numeric";
  EXPECT_THROW(function_from_json(numeric), InvalidInput);
  const NumericFunction nf = numeric_function_from_json(numeric);
  EXPECT_NEAR(std::abs(nf(Rational(5, 8)) - 0.5), 0.0, 1e-15);
  numeric["backend"] = "float";
  EXPECT_THROW(numeric_function_from_json(numeric), InvalidInput);
  EXPECT_THROW(function_from_json(Json::parse(R"({"breakpoints":["1/2"],"pieces":[[1]]})")), InvalidInput);
  EXPECT_THROW(function_from_json(Json::parse(R"({"pieces":[[1]]})")), InvalidInput);
}

TEST(Json, Groups) {
  FGAbelianGroup g = direct_sum(FGAbelianGroup::free(1), FGAbelianGroup::cyclic(6));
  const Json j = to_json(g);
  EXPECT_EQ(j.at("free_rank"), 1);
  EXPECT_EQ(j.at("torsion"), Json::parse("[6]"));
  FGAbelianGroup loc;
  loc.localized.push_back(3);
  EXPECT_EQ(to_json(loc).at("localized"), Json::parse("[3]"));
}

}  // namespace
}  // namespace omn
