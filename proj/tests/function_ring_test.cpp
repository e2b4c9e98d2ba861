#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "omn/errors.hpp"
#include "omn/piecewise.hpp"
#include "omn/polynomial.hpp"
#include "support.hpp"

namespace omn {
namespace {

Rational random_rational(std::mt19937_64& g, int num = 9, int den = 6) {
  Rational r(testing::uniform(g, -num, num), testing::uniform(g, 1, den));
  r.canonicalize();
  return r;
}

Polynomial random_poly(std::mt19937_64& g, int max_degree = 3) {
  std::vector<Rational> c(static_cast<std::size_t>(testing::uniform(g, 0, max_degree + 1)));
  for (auto& x : c) x = random_rational(g);
  return Polynomial(c);
}

// Breakpoints from a random subset of multiples of 1/12.
PiecewiseFunction random_function(std::mt19937_64& g) {
  std::vector<Rational> b{Rational(0)};
  std::vector<Polynomial> p{random_poly(g)};
  for (int i = 1; i < 12; ++i)
    if (testing::uniform(g, 0, 3) == 0) {
      b.emplace_back(i, 12);
      b.back().canonicalize();
      p.push_back(random_poly(g));
    }
  return PiecewiseFunction(b, p);
}

std::vector<Rational> sample_points() {
  std::vector<Rational> out;
  for (int i = 0; i < 97; ++i) out.emplace_back(i, 97);
  for (int i = 0; i < 24; ++i) out.emplace_back(i, 24);
  for (auto& t : out) t.canonicalize();
  return out;
}

Rational eval_direct(const std::vector<Rational>& c, const Rational& t) {
  Rational acc = 0, power = 1;
  for (const auto& x : c) {
    acc += x * power;
    power *= t;
  }
  return acc;
}

TEST(Polynomial, ArithmeticAgreesWithEvaluation) {
  auto g = testing::rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = random_poly(g), q = random_poly(g);
    const Rational t = random_rational(g), a = random_rational(g), b = random_rational(g);
    ASSERT_EQ((p * q)(t), eval_direct(p.coeffs(), t) * eval_direct(q.coeffs(), t));
    ASSERT_EQ((p + q)(t), p(t) + q(t));
    ASSERT_EQ((p - q)(t), p(t) - q(t));
    ASSERT_EQ(p.compose_affine(a, b)(t), p(a * t + b));
  }
}

TEST(Polynomial, IntegrateByPowerRule) {
  auto g = testing::rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(g, 4);
    const Rational lo = random_rational(g), hi = random_rational(g);
    Rational expected = 0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      Rational up = 1, down = 1;
      for (std::size_t e = 0; e <= k; ++e) {
        up *= hi;
        down *= lo;
      }
      expected += p.coeffs()[k] * (up - down) / Rational(static_cast<long>(k + 1));
    }
    ASSERT_EQ(p.integrate(lo, hi), expected);
  }
}

TEST(Polynomial, Normalization) {
  EXPECT_TRUE(Polynomial(std::vector<Rational>{0, 0}).is_zero());
  EXPECT_EQ(Polynomial(std::vector<Rational>{1, 2, 0}).degree(), 1);
  EXPECT_EQ(Polynomial::linear(4, -2), Polynomial(std::vector<Rational>{-2, 4}));
}

TEST(Piecewise, Construction) {
  EXPECT_THROW(PiecewiseFunction({Rational(1, 2)}, {Polynomial()}), InvalidInput);
  EXPECT_THROW(PiecewiseFunction({Rational(0), Rational(0)}, {Polynomial(), Polynomial()}), InvalidInput);
  EXPECT_THROW(PiecewiseFunction({Rational(0), Rational(1)}, {Polynomial(), Polynomial()}), InvalidInput);
  EXPECT_THROW(PiecewiseFunction({Rational(0)}, {}), InvalidInput);
  const PiecewiseFunction merged({Rational(0), Rational(1, 2)}, {Polynomial(Rational(3)), Polynomial(Rational(3))});
  EXPECT_EQ(merged.size(), 1u);
  const auto ind = PiecewiseFunction::on_interval(Rational(1, 4), Rational(1, 2), Polynomial(Rational(1)));
  EXPECT_EQ(ind(Rational(1, 4)), 1);
  EXPECT_EQ(ind(Rational(1, 2)), 0);
  EXPECT_EQ(ind(Rational(5, 4)), 1);
}

TEST(Piecewise, RingOperationsArePointwise) {
  auto g = testing::rng(23);
  const auto points = sample_points();
  for (int trial = 0; trial < 100; ++trial) {
    const PiecewiseFunction f = random_function(g), h = random_function(g);
    const PiecewiseFunction sum = f + h, prod = f * h, diff = f - h;
    for (const auto& t : points) {
      ASSERT_EQ(sum(t), f(t) + h(t));
      ASSERT_EQ(prod(t), f(t) * h(t));
      ASSERT_EQ(diff(t), f(t) - h(t));
    }
  }
}

TEST(Piecewise, DilationAndTransfer) {
  auto g = testing::rng(24);
  const auto points = sample_points();
  for (int trial = 0; trial < 60; ++trial) {
    const PiecewiseFunction f = random_function(g);
    for (int d : {1, 2, 3, 5}) {
      const PiecewiseFunction fd = dilate(f, d);
      for (const auto& t : points) {
        Rational s = Rational(d) * t;
        s -= Rational(BigInt(s.get_num() / s.get_den()));
        ASSERT_EQ(fd(t), f(s)) << d << " " << t;
      }
    }
    const PiecewiseFunction lf = transfer(f);
    for (const auto& t : points) ASSERT_EQ(lf(t), (f(t / 2) + f((t + 1) / 2)) / 2);
    // L(phi(f) h) = f L(h)
    const PiecewiseFunction h = random_function(g);
    ASSERT_EQ(transfer(dilate(f, 2) * h), f * transfer(h));
    // L(1) = 1 and integration is L-invariant
    ASSERT_EQ(integrate(transfer(f)), integrate(f));
  }
  EXPECT_THROW(dilate(PiecewiseFunction(), 0), InvalidInput);
}

TEST(Piecewise, IntegrateMatchesPieces) {
  auto g = testing::rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const PiecewiseFunction f = random_function(g);
    Rational expected = 0;
    for (std::size_t i = 0; i < f.size(); ++i) expected += f.pieces()[i].integrate(f.breakpoints()[i], f.interval_end(i));
    ASSERT_EQ(integrate(f), expected);
    ASSERT_EQ(integrate(dilate(f, 3)), expected);
  }
}

TEST(Piecewise, Winding) {
  const PiecewiseFunction ramp = PiecewiseFunction::constant(Polynomial::linear(3, 0));
  EXPECT_EQ(winding(ramp), 3);
  EXPECT_EQ(winding(dilate(ramp, 2)), 6);
  const PiecewiseFunction steps({Rational(0), Rational(1, 2)},
                                {Polynomial::linear(2, 0), Polynomial::linear(-2, 2)});
  EXPECT_EQ(winding(steps), 0);
  const PiecewiseFunction jump({Rational(0), Rational(1, 2)}, {Polynomial(), Polynomial(Rational(1, 3))});
  EXPECT_THROW(winding(jump), InvalidInput);
  const PiecewiseFunction quad = PiecewiseFunction::constant(Polynomial(std::vector<Rational>{0, 0, 1}));
  EXPECT_THROW(winding(quad), InvalidInput);
}

TEST(Piecewise, SupportAndWitness) {
  const auto f = PiecewiseFunction::on_interval(Rational(1, 4), Rational(3, 8), Polynomial::linear(1, 0));
  const auto s = support(f);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].first, Rational(1, 4));
  EXPECT_EQ(s[0].second, Rational(3, 8));
  const auto w = nonzero_witness(f);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(f(*w), 0);
  EXPECT_FALSE(nonzero_witness(PiecewiseFunction()).has_value());
}

TEST(Numeric, AgreesWithExact) {
  auto g = testing::rng(26);
  const auto points = sample_points();
  for (int trial = 0; trial < 50; ++trial) {
    const PiecewiseFunction f = random_function(g), h = random_function(g);
    const NumericFunction nf = to_numeric(f), nh = to_numeric(h);
    const NumericFunction prod = nf * nh;
    const NumericFunction lf = transfer(nf);
    const PiecewiseFunction ef = transfer(f);
    for (const auto& t : points) {
      ASSERT_NEAR(std::abs(prod(t) - Rational(f(t) * h(t)).get_d()), 0.0, 1e-9);
      ASSERT_NEAR(std::abs(lf(t) - ef(t).get_d()), 0.0, 1e-9);
    }
  }
}

TEST(Numeric, TwistedTransfer) {
  const double pi = std::acos(-1.0);
  auto g = testing::rng(27);
  const auto points = sample_points();
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewiseFunction f = random_function(g);
    const NumericFunction nf = to_numeric(f);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const NumericFunction l = transfer(nf, i, j);
        for (const auto& t : points) {
          std::complex<double> expected = 0;
          for (const Rational& s : {Rational(t / 2), Rational((t + 1) / 2)})
            expected += std::polar(1.0, 2 * pi * (j - i) * s.get_d()) * f(s).get_d();
          ASSERT_NEAR(std::abs(l(t) - expected / 2.0), 0.0, 1e-9);
        }
      }
  }
}

TEST(Numeric, SquareRootAndPhase) {
  const PiecewiseFunction f = PiecewiseFunction::constant(Polynomial(std::vector<Rational>{0, 0, 4}));
  const NumericFunction r = numeric_sqrt(f);
  for (const auto& t : sample_points()) EXPECT_NEAR(std::abs(r(t) - 2 * t.get_d()), 0.0, 1e-12);
  const NumericFunction sq = r * r;
  for (const auto& t : sample_points()) EXPECT_NEAR(std::abs(sq(t) - f(t).get_d()), 0.0, 1e-12);
  const NumericFunction ph = NumericFunction::constant(NumericPiece::phase(Rational(1)));
  EXPECT_NEAR(std::abs(ph(Rational(1, 4)) - std::complex<double>(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs((ph * ph.conj())(Rational(1, 3)) - 1.0), 0.0, 1e-12);
}

}  // namespace
}  // namespace omn
