#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "omn/errors.hpp"
#include "omn/reproduce.hpp"
#include "omn/rieffel.hpp"

namespace omn {
namespace {

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

double midpoint_integral(const PiecewiseFunction& f, int steps = 20000) {
  double acc = 0;
  for (int i = 0; i < steps; ++i) acc += Rational(f(frac(2 * i + 1, 2 * steps))).get_d();
  return acc / steps;
}

// Winding of exp(2 pi i f) from sampled principal-argument increments.
long sampled_winding(const PiecewiseFunction& f, int steps = 4096) {
  const double pi = std::acos(-1.0);
  double total = 0;
  auto at = [&](int i) { return std::polar(1.0, 2 * pi * Rational(f(frac(i % steps, steps))).get_d()); };
  for (int i = 0; i < steps; ++i) total += std::arg(at(i + 1) / at(i));
  return std::lround(total / (2 * pi));
}

FuncElement func(const Word& mu, const PiecewiseFunction& f, const Word& nu) {
  return FuncElement({FuncTerm{mu, to_numeric(f), nu}});
}

const PiecewiseFunction kOne = PiecewiseFunction::constant(Polynomial(Rational(1)));

TEST(Rieffel, CanonicalDataSatisfiesConditions) {
  const ProjectionData d = build_canonical_data();
  const ConditionReport r = check_conditions(d);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_GE(r.checks.size(), 10u);
  EXPECT_EQ(d.delta1, PiecewiseFunction::on_interval(Rational(3, 4), Rational(7, 8), Polynomial(Rational(1))));
  EXPECT_EQ(d.delta2, PiecewiseFunction::on_interval(Rational(1, 4), Rational(3, 8), Polynomial(Rational(1))));
}

TEST(Rieffel, TraceAgainstQuadrature) {
  const ProjectionData d = build_canonical_data();
  EXPECT_EQ(kms_trace(d), Rational(7, 16));
  const double numeric = (midpoint_integral(d.a0) + midpoint_integral(d.b0)) / 2;
  EXPECT_NEAR(numeric, 7.0 / 16.0, 1e-6);
}

TEST(Rieffel, K0ClassAgainstSampledWinding) {
  const ProjectionData d = build_canonical_data();
  const long sampled = sampled_winding(phi(d.a0 * d.delta1)) + sampled_winding(phi(d.b0 * d.delta2));
  EXPECT_EQ(k0_class(d), BigInt(sampled));
  EXPECT_EQ(k0_class(d), -4);
}

TEST(Rieffel, ProjectionSquaresToItself) {
  const ProjectionData d = build_canonical_data();
  const SquareReport r = assemble_and_square(d, 1024);
  EXPECT_LT(r.residual, tolerance::projection_residual);
  EXPECT_LT(r.residual_doubled, tolerance::projection_residual);
  EXPECT_LT(r.adjoint_residual, tolerance::projection_residual);
  EXPECT_THROW(assemble_and_square(d, 64, AlgebraParams(1, 3)), Unsupported);
}

TEST(Rieffel, PerturbationsAreDetected) {
  const ProjectionData d = build_canonical_data();
  const auto perturbed = perturbations(d);
  ASSERT_FALSE(perturbed.empty());
  for (const auto& [name, data] : perturbed) {
    EXPECT_FALSE(check_conditions(data).all_pass()) << name;
    EXPECT_GT(assemble_and_square(data, 1024).residual, 1e-4) << name;
  }
}

TEST(Rieffel, DeriveDataFormula) {
  const ProjectionData d = build_canonical_data();
  const PiecewiseFunction base = phi(d.a0) - phi(d.a0 * d.a0);
  EXPECT_EQ(d.a1sq, base * d.delta1);
  EXPECT_EQ(d.b1sq, base * d.delta2);
}

TEST(FuncElement, CuntzRelations) {
  const FuncElement s1 = func({1}, kOne, {});
  const FuncElement s2 = func({2}, kOne, {});
  const FuncElement one = func({}, kOne, {});
  EXPECT_LT(max_abs_on_grid(adjoint(s1) * s1 - one, 256), 1e-12);
  EXPECT_LT(max_abs_on_grid(adjoint(s1) * s2, 256), 1e-12);
  EXPECT_LT(max_abs_on_grid(s1 * adjoint(s1) + s2 * adjoint(s2) - one, 256), 1e-12);
  EXPECT_GT(max_abs_on_grid(s1 * adjoint(s1) - one, 256), 0.5);
}

TEST(FuncElement, CoefficientCommutation) {
  // f(z^2) S_1 = S_1 f(z) and S_1^* f(z^2) S_1 = f(z)
  const PiecewiseFunction f = PiecewiseFunction::on_interval(Rational(1, 5), Rational(2, 3), Polynomial::linear(3, -1));
  const FuncElement lhs = func({}, phi(f), {}) * func({1}, kOne, {});
  const FuncElement rhs = func({1}, f, {});
  EXPECT_LT(max_abs_on_grid(lhs - rhs, 512), 1e-12);
  const FuncElement back = adjoint(func({1}, kOne, {})) * func({}, phi(f), {}) * func({1}, kOne, {});
  EXPECT_LT(max_abs_on_grid(back - func({}, f, {}), 512), 1e-12);
}

TEST(FuncElement, ContractIsTransfer) {
  const PiecewiseFunction f = PiecewiseFunction::on_interval(Rational(0), Rational(1, 3), Polynomial::linear(1, 0));
  const NumericFunction h = to_numeric(f);
  const NumericFunction c = contract({1}, h, {2});
  const NumericFunction l = transfer(h, 1, 2);
  for (int i = 0; i < 64; ++i) {
    const Rational t = frac(i, 64);
    EXPECT_NEAR(std::abs(c(t) - l(t)), 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace omn
