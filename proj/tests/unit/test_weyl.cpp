#include "loomfold/weyl.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace loomfold;

namespace {

std::set<LatticeVec> closed_set(const AffineData& d, int s) {
  std::set<LatticeVec> out;
  for (const auto& r : inversion_set_closed_form(d, s)) out.insert(r.root);
  return out;
}

std::set<LatticeVec> finite_set(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::set<LatticeVec> out;
  for (auto r : rows) out.insert(LatticeVec::finite(r));
  return out;
}

std::set<LatticeVec> bars(const AffineData& d, int s) {
  std::set<LatticeVec> out;
  for (const auto& r : inversion_set_closed_form(d, s)) out.insert(r.bar);
  return out;
}

int max_coeff(const AffineData& d, int s) {
  int m = 0;
  for (const auto& a : finite_positive_roots(d)) m = std::max<int>(m, to_int(a[s]));
  return m;
}

}  // namespace

TEST(SimpleReflection, Basics) {
  const auto d = build_affine(make_type(Family::D, 3, 2));
  for (int i = 0; i <= 2; ++i) {
    const auto s = simple_reflection(d, i);
    EXPECT_EQ(s.apply(LatticeVec::simple(2, i, true)), -LatticeVec::simple(2, i, true));
    EXPECT_EQ(s.apply(d.delta), d.delta);
    EXPECT_EQ(s * s, identity_elt(d));
  }
  EXPECT_EQ(simple_reflection(d, 2).apply(LatticeVec::simple(2, 1, true)), LatticeVec::affine({0, 1, 2}));
  EXPECT_THROW(simple_reflection(d, 3), IndexOutOfRange);
  EXPECT_THROW(simple_reflection(d, -1), IndexOutOfRange);
}

TEST(Translation, FixesDeltaAndShiftsByPairing) {
  for (const auto& t : table_types(8)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto tr = translation_minus_lambda(d, s);
      EXPECT_EQ(tr.apply(d.delta), d.delta);
      const int scale = (t.r == 1 || t.is_a_even_twisted()) ? 1 : d.sym[s];
      for (int j = 1; j <= d.n(); ++j) {
        auto a = LatticeVec::simple(d.n(), j, true);
        auto want = a + Rational(j == s ? scale : 0) * d.delta;
        EXPECT_EQ(tr.apply(a), want) << type_name(t);
      }
    }
  }
}

TEST(Translation, Examples) {
  const auto a22 = build_affine(make_type(Family::A, 2, 2));
  // alpha_1 -> alpha_1 + delta; this is what yields {alpha_1, 2 alpha_1 + delta}.
  EXPECT_EQ(translation_minus_lambda(a22, 1).apply(LatticeVec::affine({0, 1})), LatticeVec::affine({1, 3}));
  const auto d32 = build_affine(make_type(Family::D, 3, 2));
  EXPECT_EQ(d32.sym[2], 1);
  EXPECT_EQ(translation_minus_lambda(d32, 2).apply(LatticeVec::simple(2, 2, true)),
            LatticeVec::simple(2, 2, true) + d32.delta);
  const auto d43 = build_affine(make_type(Family::D, 4, 3));
  EXPECT_EQ(translation_minus_lambda(d43, 2).apply(LatticeVec::simple(2, 2, true)),
            LatticeVec::simple(2, 2, true) + 3 * d43.delta);
}

TEST(Translation, Additive) {
  for (const auto& t : table_types(8)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto one = translation(d, s, 1);
      EXPECT_EQ(one * one, translation(d, s, 2)) << type_name(t);
      EXPECT_EQ(one * translation(d, s, -1), identity_elt(d));
    }
  }
}

TEST(Translation, MapsRealRootsToRealRoots) {
  for (const auto& t : table_types(8)) {
    const auto d = build_affine(t);
    const auto roots = finite_positive_roots(d);
    for (int s = 1; s <= d.n(); ++s) {
      const auto tr = translation_minus_lambda(d, s);
      for (int i = 0; i <= d.n(); ++i)
        EXPECT_TRUE(is_real_root(d, tr.apply(LatticeVec::simple(d.n(), i, true)), roots)) << type_name(t);
      if (!t.is_a_even_twisted()) EXPECT_TRUE(is_real_root(d, tr.apply(lift(d, d.theta, 0)), roots));
    }
  }
}

TEST(LambdaS, PairingRule) {
  EXPECT_EQ(lambda_s(build_affine(make_type(Family::E, 8, 1)), 5).scale, 1);
  EXPECT_EQ(lambda_s(build_affine(make_type(Family::A, 6, 2)), 3).scale, 1);
  const auto d42 = build_affine(make_type(Family::D, 4, 2));
  EXPECT_EQ(lambda_s(d42, 2).scale, 2);
  EXPECT_EQ(lambda_s(d42, 2).rule, PairingRule::d_s_times_coeff);
  EXPECT_EQ(lambda_s(d42, 3).scale, 1);
  EXPECT_THROW(lambda_s(d42, 0), IndexOutOfRange);
  // lambda as a vector pairs with alpha_i as the rule says, for every alpha.
  for (const auto& t : table_types(6)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto lam = lambda_vector(d, s);
      const auto l = lambda_s(d, s);
      for (const auto& a : finite_positive_roots(d)) EXPECT_EQ(bilinear(d, lam, a), l.pair(a)) << type_name(t);
    }
  }
}

TEST(ClosedForm, A5TwistedNode1) {
  const auto d = build_affine(make_type(Family::A, 5, 2));
  EXPECT_EQ(bars(d, 1), finite_set({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1}, {2, 2, 1}}));
  for (const auto& r : inversion_set_closed_form(d, 1)) EXPECT_EQ(r.root[0], 0);
}

TEST(ClosedForm, D3TwistedNode2) {
  const auto d = build_affine(make_type(Family::D, 3, 2));
  EXPECT_EQ(bars(d, 2), finite_set({{0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(inversion_set_closed_form(d, 2).size(), 3u);
}

TEST(ClosedForm, D4TwistedNode3) {
  const auto d = build_affine(make_type(Family::D, 4, 2));
  EXPECT_EQ(bars(d, 3), finite_set({{0, 0, 1}, {0, 1, 2}, {1, 1, 2}, {0, 1, 1}, {1, 2, 2}, {1, 1, 1}}));
}

TEST(ClosedForm, A2TwistedNode1) {
  const auto d = build_affine(make_type(Family::A, 2, 2));
  const auto got = inversion_set_closed_form(d, 1);
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].root, LatticeVec::affine({0, 1}));
  EXPECT_EQ(got[0].family, 1);
  EXPECT_EQ(got[1].root, LatticeVec::affine({1, 4}));
  EXPECT_EQ(got[1].family, 2);
  EXPECT_EQ(got[1].bar, LatticeVec::finite({2}));
}

TEST(ClosedForm, AllPositive) {
  for (const auto& t : table_types(8)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s)
      for (const auto& r : inversion_set_closed_form(d, s)) {
        EXPECT_TRUE(r.root.is_positive());
        EXPECT_EQ(project_bar(d, r.root), r.bar);
      }
  }
}

TEST(Factorize, KnownWords) {
  struct Case {
    AffineType t;
    int s;
    ReducedWord word;
  };
  const std::vector<Case> cases{{make_type(Family::A, 5, 2), 1, {1, 2, 3, 2, 1}},
                                {make_type(Family::D, 3, 2), 2, {2, 1, 2}},
                                {make_type(Family::D, 4, 2), 3, {3, 2, 1, 3, 2, 3}}};
  for (const auto& c : cases) {
    const auto d = build_affine(c.t);
    const auto f = alcove_factorize(d, translation_minus_lambda(d, c.s));
    EXPECT_EQ(braid_canonical(d, f.word), braid_canonical(d, c.word)) << type_name(c.t);
    EXPECT_EQ(f.word.front(), c.s);
    EXPECT_EQ(f.word.back(), f.tau[0]) << type_name(c.t);
  }
}

TEST(Factorize, D3TwistedTau) {
  const auto d = build_affine(make_type(Family::D, 3, 2));
  const auto f = alcove_factorize(d, translation_minus_lambda(d, 2));
  EXPECT_EQ(f.tau, (std::vector<int>{2, 1, 0}));
}

TEST(Factorize, A2Twisted) {
  const auto d = build_affine(make_type(Family::A, 2, 2));
  const auto f = alcove_factorize(d, translation_minus_lambda(d, 1));
  EXPECT_EQ(f.word, (ReducedWord{1, 0}));
  EXPECT_EQ(f.tau, (std::vector<int>{0, 1}));
}

TEST(Factorize, RejectsNonWeylMatrix) {
  const auto d = build_affine(make_type(Family::A, 2, 1));
  ExtWeylElt twice{RationalMatrix::identity(3), std::nullopt, std::nullopt};
  for (int i = 0; i < 3; ++i) twice.matrix(i, i) = 2;
  EXPECT_THROW(alcove_factorize(d, twice), NotLengthZeroResidue);
}

TEST(Factorize, RoundTrip) {
  for (const auto& t : table_types(5)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto tr = translation_minus_lambda(d, s);
      const auto f = alcove_factorize(d, tr);
      auto m = identity_elt(d);
      for (int i : f.word) m = m * simple_reflection(d, i);
      RationalMatrix tau(d.n() + 1, d.n() + 1);
      for (int j = 0; j <= d.n(); ++j) tau(f.tau[j], j) = 1;
      EXPECT_EQ((m * ExtWeylElt{tau, std::nullopt, std::nullopt}).matrix, tr.matrix) << type_name(t);
    }
  }
}

TEST(FromWord, Examples) {
  const auto d32 = build_affine(make_type(Family::D, 3, 2));
  const auto b = inversion_set_from_word(d32, {2, 1, 2});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(project_bar(d32, b[0]), LatticeVec::finite({0, 1}));
  EXPECT_EQ(project_bar(d32, b[1]), LatticeVec::finite({1, 2}));
  EXPECT_EQ(project_bar(d32, b[2]), LatticeVec::finite({1, 1}));
  const auto a52 = build_affine(make_type(Family::A, 5, 2));
  const auto c = inversion_set_from_word(a52, {1, 2, 3, 2, 1});
  EXPECT_EQ(project_bar(a52, c[2]), LatticeVec::finite({2, 2, 1}));
  EXPECT_EQ(project_bar(a52, c[4]), LatticeVec::finite({1, 2, 1}));
  EXPECT_TRUE(inversion_set_from_word(a52, {}).empty());
}

TEST(FromWord, RejectsNonReduced) {
  const auto d = build_affine(make_type(Family::A, 5, 2));
  EXPECT_THROW(inversion_set_from_word(d, {1, 1}), NotReduced);
  EXPECT_THROW(inversion_set_from_word(d, {1, 2, 1, 2, 1, 2, 1}), NotReduced);
  EXPECT_THROW(inversion_set_from_word(d, {4}), IndexOutOfRange);
}

TEST(Oracle, WordClosedFormAndBruteForceAgree) {
  for (const auto& t : table_types(8)) {
    const auto d = build_affine(t);
    const auto roots = finite_positive_roots(d);
    for (int s = 1; s <= d.n(); ++s) {
      const auto closed = closed_set(d, s);
      const auto f = alcove_factorize(d, translation_minus_lambda(d, s));
      const auto w = inversion_set_from_word(d, f.word);
      EXPECT_EQ(std::set<LatticeVec>(w.begin(), w.end()), closed) << type_name(t) << " s=" << s;
      EXPECT_EQ(w.size(), closed.size()) << "length equals |inversion set|";
      const int kmax = 2 * lambda_s(d, s).scale * max_coeff(d, s) + 2;
      const auto brute = inversion_set_brute_force(d, s, kmax);
      EXPECT_EQ(std::set<LatticeVec>(brute.begin(), brute.end()), closed) << type_name(t) << " s=" << s;
      for (const auto& b : w) {
        EXPECT_TRUE(b.is_positive());
        EXPECT_TRUE(b.is_integral());
        EXPECT_TRUE(is_real_root(d, b, roots)) << b.compact();
      }
    }
  }
}

TEST(Oracle, WordCanonicalEndsAtTau0) {
  for (const auto& t : table_types(8)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto f = alcove_factorize(d, translation_minus_lambda(d, s));
      EXPECT_EQ(f.word.front(), s);
      // tau(0) can be braided to the end.
      const auto c = braid_canonical(d, f.word);
      bool ok = false;
      for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == f.tau[0]) {
          ok = true;
          break;
        }
        if (d.gcm[c[k]][f.tau[0]] != 0) break;
      }
      EXPECT_TRUE(ok) << type_name(t) << " s=" << s;
    }
  }
}

TEST(LengthDelta, Examples) {
  const auto d = build_affine(make_type(Family::D, 3, 2));
  EXPECT_EQ(length_delta(d, 2, 2, Side::left), -1);
  EXPECT_EQ(length_delta(d, 2, 0, Side::right), -1);
  EXPECT_EQ(length_delta(d, 2, 1, Side::left), 1);
}

TEST(LengthDelta, SignsAgainstWordLengths) {
  // Compare against lengths measured from factorizations of s_k t and t s_k.
  for (const auto& t : table_types(6)) {
    const auto d = build_affine(t);
    for (int s = 1; s <= d.n(); ++s) {
      const auto tr = translation_minus_lambda(d, s);
      const auto base = static_cast<int>(alcove_factorize(d, tr).word.size());
      for (int k = 0; k <= d.n(); ++k) {
        const int left = static_cast<int>(alcove_factorize(d, simple_reflection(d, k) * tr).word.size()) - base;
        const int right = static_cast<int>(alcove_factorize(d, tr * simple_reflection(d, k)).word.size()) - base;
        EXPECT_EQ(length_delta(d, s, k, Side::left), left) << type_name(t);
        EXPECT_EQ(length_delta(d, s, k, Side::right), right) << type_name(t);
        EXPECT_EQ(left == -1, k == s);
        EXPECT_EQ(right == -1, k == 0);
      }
    }
  }
}

TEST(BraidCanonical, SortsCommutingLetters) {
  const auto d = build_affine(make_type(Family::D, 4, 2));
  EXPECT_EQ(braid_canonical(d, {3, 1, 2}), (ReducedWord{1, 3, 2}));
  EXPECT_EQ(braid_canonical(d, {2, 1}), (ReducedWord{2, 1}));
}
