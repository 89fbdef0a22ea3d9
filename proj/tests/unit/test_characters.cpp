#include "loomfold/characters.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace loomfold;

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient of e^{-m} in prod_j (1 - e^{-beta_j})^{-e_j}: sum over k_j with
// sum k_j beta_j = m of prod C(k_j + e_j - 1, k_j).
std::int64_t count_coefficient(const std::vector<Factor>& f, std::size_t j, Monomial rest) {
  if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
    return 1;  // all remaining k = 0
  }
  if (j == f.size()) return 0;
  std::int64_t total = 0;
  Monomial cur = rest;
  for (int k = 0;; ++k) {
    if (std::any_of(cur.begin(), cur.end(), [](int x) { return x < 0; })) break;
    const std::int64_t ways = f[j].exponent == 0 ? (k == 0) : binom(k + f[j].exponent - 1, k);
    if (ways) total += ways * count_coefficient(f, j + 1, cur);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= f[j].beta[i];
  }
  return total;
}

void all_monomials(int rank, int degree, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == rank) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int i = 0; i < pos; ++i) used += cur[i];
  for (int x = 0; used + x <= degree; ++x) {
    cur[pos] = x;
    all_monomials(rank, degree, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> monomials_up_to(int rank, int degree) {
  std::vector<Monomial> out;
  Monomial cur(rank, 0);
  all_monomials(rank, degree, cur, 0, out);
  return out;
}

}  // namespace

TEST(CharSeries, DegreeZeroIsOne) {
  for (const auto& t : table_types(4)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto c = char_product(d, s, 0);
      ASSERT_EQ(c.terms().size(), 1u);
      EXPECT_EQ(c.coefficient(Monomial(d.n(), 0)), 1);
    }
  }
}

TEST(CharSeries, GeometricMatchesRepeatedFactor) {
  CharSeries a = CharSeries::one(2, 9), b = CharSeries::one(2, 9);
  a.multiply_geometric({1, 1}, 3);
  for (int i = 0; i < 3; ++i) b.multiply_geometric({1, 1}, 1);
  EXPECT_EQ(a.terms(), b.terms());
  EXPECT_EQ(a.coefficient({2, 2}), 6);  // C(2+2, 2)
  EXPECT_THROW(a.multiply_geometric({1, 0}, -1), NonIntegerExponent);
  EXPECT_THROW(a.multiply_geometric({0, 0}, 1), Error);
}

TEST(CharSeries, AddRejectsWrongRank) {
  CharSeries a(2, 3);
  EXPECT_THROW(a.add({1}, 1), RankMismatch);
  a.add({3, 3}, 5);  // above the truncation
  EXPECT_TRUE(a.terms().empty());
}

TEST(CharProduct, D3TwistedLowOrder) {
  const auto d = build_affine(make_type(Family::D, 3, 2));
  const auto f = char_factors(d, 2);
  ASSERT_EQ(f.size(), 3u);
  for (const auto& x : f) EXPECT_EQ(x.exponent, 1);
  const auto c = char_product(d, 2, 2);
  EXPECT_EQ(c.coefficient({1, 1}), 1);
  EXPECT_EQ(c.coefficient({0, 2}), 1);
  EXPECT_EQ(c.coefficient({0, 1}), 1);
  EXPECT_EQ(c.coefficient({1, 0}), 0);
}

TEST(CharProduct, A2TwistedLaw) {
  const auto c = char_product(build_affine(make_type(Family::A, 2, 2)), 1, 20);
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(c.coefficient({k}), (k + 2) / 2) << k;
}

TEST(CharProduct, AgainstMultisetCount) {
  const std::vector<std::pair<AffineType, int>> cases{
      {make_type(Family::A, 5, 2), 1}, {make_type(Family::A, 5, 2), 2}, {make_type(Family::D, 3, 2), 2},
      {make_type(Family::D, 4, 2), 3}, {make_type(Family::D, 4, 3), 1}, {make_type(Family::D, 4, 3), 2},
      {make_type(Family::A, 4, 2), 1}, {make_type(Family::G, 2, 1), 2}, {make_type(Family::C, 3, 1), 2},
      {make_type(Family::E, 6, 2), 4}};
  for (const auto& [t, s] : cases) {
    const auto d = build_affine(t);
    const int deg = d.n() <= 3 ? 8 : 6;
    const auto f = char_factors(d, s);
    const auto c = char_product(d, s, deg);
    for (const auto& m : monomials_up_to(d.n(), deg))
      EXPECT_EQ(c.coefficient(m), count_coefficient(f, 0, m)) << type_name(t) << " s=" << s;
  }
}

TEST(CharProduct, NonnegativeWithUnitConstant) {
  for (const auto& t : table_types(5)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto c = char_product(d, s, 6);
      EXPECT_EQ(c.coefficient(Monomial(d.n(), 0)), 1);
      for (const auto& [m, x] : c.terms()) EXPECT_GT(x, 0);
      for (const auto& f : char_factors(d, s))
        if (CharSeries::height(f.beta) <= 6) EXPECT_GE(c.coefficient(f.beta), 1) << type_name(t);
    }
  }
}

TEST(CharProduct, OrderIndependent) {
  std::mt19937 rng(20240611);
  for (const auto& t : table_types(6)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      auto f = char_factors(d, s);
      const auto base = product_series(d.n(), f, 7);
      for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(f.begin(), f.end(), rng);
        EXPECT_EQ(product_series(d.n(), f, 7).terms(), base.terms()) << type_name(t);
      }
    }
  }
}

TEST(CharProduct, ProductOfSeriesMatchesSplitFactors) {
  const auto d = build_affine(make_type(Family::D, 5, 2));
  const auto f = char_factors(d, 2);
  const std::vector<Factor> left(f.begin(), f.begin() + f.size() / 2), right(f.begin() + f.size() / 2, f.end());
  const auto whole = product_series(d.n(), f, 8);
  const auto split = product_series(d.n(), left, 8) * product_series(d.n(), right, 8);
  EXPECT_EQ(whole.terms(), split.terms());
}

TEST(FoldSeries, A2ParentExample) {
  const auto om = sigma_for(make_type(Family::A, 2, 2));
  const auto parent = parent_char_product(om, 1, 12);
  EXPECT_EQ(parent.coefficient({1, 1}), 1);
  const auto folded = fold_series(parent, om, 12);
  const auto want = product_series(1, {{{1}, 1}, {{2}, 1}}, 12);
  EXPECT_TRUE(series_equal(folded, want, 12).equal);
}

TEST(FoldSeries, OneMapsToOne) {
  const auto om = sigma_for(make_type(Family::E, 6, 2));
  const auto f = fold_series(CharSeries::one(6, 5), om, 5);
  EXPECT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.coefficient({0, 0, 0, 0}), 1);
  EXPECT_THROW(fold_series(CharSeries::one(5, 5), om, 5), RankMismatch);
}

TEST(FoldSeries, RingHomomorphism) {
  const auto t = make_type(Family::A, 5, 2);
  const auto om = sigma_for(t);
  const auto a = parent_char_product(om, 1, 8);
  const auto b = parent_char_product(om, 2, 8);
  EXPECT_TRUE(series_equal(fold_series(a * b, om, 8), fold_series(a, om, 8) * fold_series(b, om, 8), 8).equal);
}

TEST(FoldSeries, KnownCells) {
  EXPECT_TRUE(fold_check(make_type(Family::A, 5, 2), 1, 8).equal);
  const auto c = fold_check(make_type(Family::D, 4, 2), 3, 10);
  EXPECT_TRUE(c.equal);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(FoldSeries, AllTwistedCellsLowDegree) {
  for (const auto& t : twisted_types(5))
    for (int s = 1; s <= t.n; ++s) EXPECT_TRUE(fold_check(t, s, 8).equal) << type_name(t) << " s=" << s;
}

TEST(SeriesEqual, Witness) {
  auto one = CharSeries::one(2, 4);
  auto other = CharSeries::one(2, 4);
  other.add({1, 0}, 1);
  other.add({2, 1}, 4);
  EXPECT_TRUE(series_equal(one, one, 4).equal);
  const auto c = series_equal(one, other, 4);
  EXPECT_FALSE(c.equal);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->monomial, (Monomial{1, 0}));
  EXPECT_EQ(c.witness->left, 0);
  EXPECT_EQ(c.witness->right, 1);
  EXPECT_THROW(series_equal(one, CharSeries::one(3, 4), 4), RankMismatch);
  EXPECT_THROW(series_equal(one, other, 6), Error);
}
