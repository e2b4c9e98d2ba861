#include <gtest/gtest.h>

#include <set>

#include "omn/entropy.hpp"
#include "omn/errors.hpp"
#include "support.hpp"

namespace omn {
namespace {

// Rank over Q(i) of the operators restricted to the probe window, by
// Gaussian elimination on their matrix columns.
std::size_t window_rank(const std::vector<Monomial>& ops, const AlgebraParams& a, const std::vector<Rational>& probes) {
  struct Key {
    bool operator()(const std::pair<std::size_t, Rational>& x, const std::pair<std::size_t, Rational>& y) const {
      if (x.first != y.first) return x.first < y.first;
      return cmp(x.second, y.second) < 0;
    }
  };
  using Row = std::map<std::pair<std::size_t, Rational>, Scalar, Key>;
  std::vector<Row> basis;
  for (const auto& op : ops) {
    Row row;
    for (std::size_t i = 0; i < probes.size(); ++i)
      for (const auto& [q, c] : testing::act(op, testing::basis(probes[i]), a))
        if (!c.is_zero()) row[{i, q}] += c;
    for (const auto& b : basis) {
      const auto pivot = b.begin();
      const auto it = row.find(pivot->first);
      if (it == row.end()) continue;
      const Scalar f = it->second * pivot->second.inverse();
      for (const auto& [key, c] : b) {
        row[key] -= f * c;
        if (row[key].is_zero()) row.erase(key);
      }
    }
    if (row.empty()) continue;
    basis.push_back(row);
    // keep pivots distinct: eliminate the new pivot from earlier rows
    const auto pivot = basis.back().begin();
    for (std::size_t j = 0; j + 1 < basis.size(); ++j) {
      const auto it = basis[j].find(pivot->first);
      if (it == basis[j].end()) continue;
      const Scalar f = it->second * pivot->second.inverse();
      for (const auto& [key, c] : basis.back()) {
        basis[j][key] -= f * c;
        if (basis[j][key].is_zero()) basis[j].erase(key);
      }
    }
  }
  return basis.size();
}

TEST(Entropy, NormIndexAndWords) {
  EXPECT_EQ(norm_index({}, 3), 0);
  EXPECT_EQ(norm_index({1, 1}, 3), 0);
  EXPECT_EQ(norm_index({3, 2}, 3), 2 + 3);
  EXPECT_EQ(norm_index({2, 2, 2}, 2), 7);
  const auto w = words_of_length(2, 3);
  ASSERT_EQ(w.size(), 9u);
  EXPECT_EQ(w.front(), (Word{1, 1}));
  EXPECT_EQ(w[1], (Word{1, 2}));
  EXPECT_EQ(w.back(), (Word{3, 3}));
  std::set<std::int64_t> idx;
  for (const auto& x : words_of_length(3, 2)) idx.insert(norm_index(x, 2));
  EXPECT_EQ(idx.size(), 8u);
  EXPECT_EQ(*idx.rbegin(), 7);
}

TEST(Entropy, OmegaSize) {
  for (int n = 2; n <= 3; ++n)
    for (int s = 0; s <= 2; ++s) {
      const AlgebraParams a(1, n);
      EXPECT_EQ(static_cast<std::int64_t>(omega(s, a).size()), omega_size(s, n));
    }
  EXPECT_EQ(omega_size(0, 2), 3);
  EXPECT_EQ(omega_size(1, 2), 9 * 5);
  EXPECT_THROW(omega(3, AlgebraParams(1, 3), 100), BoundExceeded);
  EXPECT_THROW(omega(-1, AlgebraParams(1, 2)), InvalidInput);
}

TEST(Entropy, DimensionsAgainstWindowRank) {
  for (auto [n, n_max] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
    const AlgebraParams a(1, n);
    const EntropyTable t = entropy_estimate(0, n_max, a);
    ASSERT_EQ(t.rows.size(), static_cast<std::size_t>(n_max));
    const auto probes = testing::probe_indices(a, 120, 0);
    std::set<Monomial> terms;
    std::vector<Element> current;
    for (const auto& mon : omega(0, a)) current.emplace_back(mon);
    for (int N = 1; N <= n_max; ++N) {
      if (N > 1)
        for (auto& x : current) x = canonical_endo(x, a);
      for (const auto& x : current)
        for (const auto& [mon, c] : x.terms()) terms.insert(mon);
      const std::vector<Monomial> ops(terms.begin(), terms.end());
      EXPECT_EQ(t.rows[static_cast<std::size_t>(N - 1)].dimension, window_rank(ops, a, probes)) << "n=" << n << " N=" << N;
    }
  }
}

TEST(Entropy, PinnedTable) {
  const EntropyTable t = entropy_estimate(0, 6, AlgebraParams(1, 2));
  const std::vector<std::size_t> expected{3, 8, 18, 38, 78, 158};
  ASSERT_EQ(t.rows.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(t.rows[i].dimension, expected[i]);
    EXPECT_TRUE(t.rows[i].within_bound);
  }
  EXPECT_NEAR(t.growth_rate, std::log(158.0 / 78.0), 1e-12);
  EXPECT_FALSE(t.partial);
  EXPECT_THROW(entropy_estimate(0, 3, AlgebraParams(2, 3)), InvalidInput);
}

TEST(Entropy, PartialOnBound) {
  const EntropyTable t = entropy_estimate(0, 12, AlgebraParams(1, 2), 200);
  EXPECT_TRUE(t.partial);
  EXPECT_FALSE(t.warning.empty());
  EXPECT_LT(t.rows.size(), 12u);
}

TEST(RhoR, IsMultiplicative) {
  auto g = testing::rng(61);
  const AlgebraParams a(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = testing::random_element(g, 2, 2, 1, 2);
    const Element y = testing::random_element(g, 2, 2, 1, 2);
    const auto px = rho_r_matrix(x, 1, a), py = rho_r_matrix(y, 1, a), pxy = rho_r_matrix(mul(x, y, a), 1, a);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Element acc;
        for (std::size_t l = 0; l < 2; ++l) acc += mul(px[i][l], py[l][j], a);
        ASSERT_TRUE(equal_in_algebra(acc, pxy[i][j], a));
      }
  }
}

TEST(RhoR, ShapeOnRandomTuples) {
  auto g = testing::rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform(g, 2, 3);
    const AlgebraParams a(1, n);
    const int s = testing::uniform(g, 0, 1);
    const int N = testing::uniform(g, 1, 2);
    const int r = N + s + testing::uniform(g, 0, 1);
    const int l = testing::uniform(g, 1, N);
    Monomial mon = testing::random_monomial(g, n, s, static_cast<int>(ipow(n, s)));
    const RhoResult res = rho_r(mon, r, l, s, N, a);
    ASSERT_TRUE(res.shape.ok()) << to_string(mon) << " r=" << r << " l=" << l;
    ASSERT_LE(res.shape.exponents.size(), 2u);
  }
}

TEST(RhoR, HypothesisViolations) {
  const AlgebraParams a(1, 2);
  EXPECT_THROW(rho_r(Monomial::z(3), 2, 1, 0, 1, a), InvalidInput);
  EXPECT_THROW(rho_r(Monomial::s(1), 2, 1, 0, 1, a), InvalidInput);
  EXPECT_THROW(rho_r(Monomial::one(), 1, 1, 1, 1, a), InvalidInput);
  EXPECT_THROW(rho_r(Monomial::one(), 3, 0, 0, 1, a), InvalidInput);
  EXPECT_THROW(rho_r(Monomial::one(), 3, 1, 0, 1, AlgebraParams(2, 3)), InvalidInput);
  try {
    rho_r(Monomial::z(5), 4, 1, 1, 1, a);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("|k| <= n^s"), std::string::npos);
  }
}

}  // namespace
}  // namespace omn
