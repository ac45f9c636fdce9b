#include <random>

#include <gtest/gtest.h>

#include "lusztig/conemat.hpp"
#include "oracles.hpp"

using namespace lusztig;

namespace {

ReducedWord a3_word() { return ReducedWord(cartan_from_type('A', 3), {2, 3, 2, 1, 2, 3}); }

// Cone membership straight from the consecutive-occurrence inequalities, with
// the Cartan matrix read from the raw type table.
bool cone_oracle(const IntMatrix& a, const Letters& w, const IntVec& c) {
  for (Int x : c)
    if (x < 0) return false;
  for (std::size_t p = 0; p < w.size(); ++p) {
    std::size_t q = p + 1;
    while (q < w.size() && w[q] != w[p]) ++q;
    if (q == w.size()) continue;
    Int s = c[p] + c[q];
    for (std::size_t r = p + 1; r < q; ++r)
      s += a(static_cast<std::size_t>(w[p] - 1), static_cast<std::size_t>(w[r] - 1)) * c[r];
    if (s > 0) return false;
  }
  return true;
}

std::vector<ReducedWord> small_words() {
  std::vector<ReducedWord> out;
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}, {'B', 3}, {'C', 3}}) {
    const CartanSpec c = cartan_from_type(f, n);
    for (const auto& w : enumerate_reduced_words(c)) out.emplace_back(c, w);
  }
  return out;
}

}  // namespace

TEST(Matrices, A1) {
  const ReducedWord w(cartan_from_type('A', 1), {1});
  for (const auto& m : {matrix_V(w), matrix_W(w), matrix_C(w), matrix_P(w), matrix_X(w), matrix_L(w)})
    EXPECT_EQ(m, (IntMatrix{{1}}));
  EXPECT_EQ(matrix_S(w), (IntMatrix{{-1}}));
  EXPECT_EQ(matrix_T(w), (IntMatrix{{-1}}));
  EXPECT_EQ(matrix_Ltilde(w), (IntMatrix{{-1}}));
}

TEST(Matrices, A2Word121) {
  const ReducedWord w(cartan_from_type('A', 2), {1, 2, 1});
  EXPECT_EQ(matrix_V(w), (IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(matrix_W(w), (IntMatrix{{1, 0, -1}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(matrix_S(w), (IntMatrix{{-1, 1, -2}, {0, -1, 1}, {0, 0, -1}}));
  EXPECT_EQ(matrix_T(w), (IntMatrix{{-1, -1, 1}, {0, -1, -1}, {0, 0, -1}}));
  EXPECT_EQ(matrix_C(w), (IntMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(matrix_P(w), (IntMatrix{{1, 1, 0}, {1, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(matrix_X(w), (IntMatrix{{0, 0, 1}, {1, 1, 1}, {0, 1, 0}}));
  // Row 2 is (0,-1,1): letter 2 does not recur, so only the diagonal and the
  // -a(2,1) entry for position 3 survive.
  EXPECT_EQ(matrix_Ltilde(w), (IntMatrix{{-1, 1, -1}, {0, -1, 1}, {0, 0, -1}}));
  EXPECT_EQ(matrix_L(w), (IntMatrix{{-1, 1, -1}, {0, 0, 1}, {1, 0, 0}}));
}

TEST(Matrices, A3ExampleWord) {
  const ReducedWord w = a3_word();
  EXPECT_EQ(matrix_V(w), (IntMatrix{{1, 0, 1, 0, 1, 0}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 1, 0},
                                    {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
  EXPECT_EQ(matrix_T(w), (IntMatrix{{-1, -1, 1, 0, -1, 1}, {0, -1, -1, -1, 0, 1}, {0, 0, -1, -1, 1, 0},
                                    {0, 0, 0, -1, -1, -1}, {0, 0, 0, 0, -1, -1}, {0, 0, 0, 0, 0, -1}}));
  EXPECT_EQ(matrix_C(w), (IntMatrix{{1, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 1, 1, 0, 0},
                                    {0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}}));
  EXPECT_EQ(matrix_P(w), (IntMatrix{{1, 1, 0, 0, 1, 0}, {1, 1, 1, 1, 1, 0}, {0, 0, 1, 1, 0, 0},
                                    {1, 1, 1, 1, 1, 1}, {1, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}}));
  EXPECT_EQ(matrix_X(w), (IntMatrix{{0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1},
                                    {1, 1, 1, 1, 1, 1}, {1, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 0}}));
  EXPECT_EQ(matrix_L(w), (IntMatrix{{-1, 1, -1, 0, 0, 0}, {0, -1, 1, 0, 1, -1}, {0, 0, -1, 1, -1, 0},
                                    {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));
}

TEST(Matrices, B2Word1212) {
  const ReducedWord w(cartan_from_type('B', 2), {1, 2, 1, 2});
  EXPECT_EQ(matrix_S(w), (IntMatrix{{-1, 1, -2, 1}, {0, -1, 2, -2}, {0, 0, -1, 1}, {0, 0, 0, -1}}));
  EXPECT_EQ(matrix_C(w), (IntMatrix{{1, 1, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  EXPECT_EQ(matrix_X(w), (IntMatrix{{0, 0, 1, 0}, {2, 1, 2, 1}, {1, 1, 1, 1}, {0, 0, 0, 1}}));
  EXPECT_EQ(matrix_L(w), (IntMatrix{{-1, 1, -1, 0}, {0, -1, 2, -1}, {1, 0, 0, 0}, {0, 0, 0, 1}}));
}

TEST(LowestString, Examples) {
  const ReducedWord w(cartan_from_type('A', 2), {1, 2, 1});
  EXPECT_EQ(lowest_string(w, WeightVec{1, 0}), (IntVec{1, 1, 0}));
  EXPECT_EQ(lowest_string(w, WeightVec{0, 0}), (IntVec{0, 0, 0}));
  EXPECT_THROW(lowest_string(w, WeightVec{-1, 0}), NotDominantError);
  EXPECT_THROW(lowest_string(w, WeightVec{1, 0, 0}), RankMismatchError);
  EXPECT_EQ(mu_weight(w, 1), (WeightVec{1, 0}));
}

TEST(LowestString, SumsToHeightOfLambdaMinusW0Lambda) {
  // sum_k v_k alpha_{i_k} = lambda - w0 lambda, checked in weight coordinates.
  std::mt19937_64 rng(5);
  for (const auto& w : small_words()) {
    const auto& c = w.cartan();
    for (int t = 0; t < 5; ++t) {
      WeightVec lam(static_cast<std::size_t>(c.rank()));
      for (std::size_t i = 0; i < lam.size(); ++i) lam[i] = static_cast<Int>(rng() % 4);
      const IntVec v = lowest_string(w, lam);
      WeightVec total(lam.size());
      for (int k = 1; k <= w.length(); ++k)
        total = total + v[static_cast<std::size_t>(k - 1)] * c.root_to_weight(c.simple_root(w.letter(k)));
      const WeightVec w0lam = apply_word(c, w.letters(), lam);
      ASSERT_EQ(total, lam - w0lam);
    }
  }
}

TEST(MatrixProperties, WIsInverseOfVByOracle) {
  for (const auto& w : small_words()) {
    const auto inv = oracle::integer_inverse(matrix_V(w));
    ASSERT_TRUE(inv.has_value());
    ASSERT_EQ(matrix_W(w), *inv) << format_word(w.letters());
  }
}

TEST(MatrixProperties, LIsInverseOfXByOracle) {
  for (const auto& w : small_words()) {
    const auto inv = oracle::integer_inverse(matrix_X(w));
    ASSERT_TRUE(inv.has_value()) << format_word(w.letters());
    ASSERT_EQ(matrix_L(w), *inv) << format_word(w.letters());
  }
}

TEST(MatrixProperties, CEqualsMinusSInverseV) {
  for (const auto& w : small_words()) {
    const auto sinv = oracle::integer_inverse(matrix_S(w));
    ASSERT_TRUE(sinv.has_value());
    ASSERT_EQ(-(*sinv * matrix_V(w)), matrix_C(w)) << format_word(w.letters());
  }
}

TEST(ConeMembership, Examples) {
  const ReducedWord w(cartan_from_type('A', 2), {1, 2, 1});
  EXPECT_TRUE(in_lusztig_cone_def(w, {0, 1, 0}));
  EXPECT_TRUE(in_lusztig_cone_L(w, {0, 1, 0}).inside);
  EXPECT_FALSE(in_lusztig_cone_def(w, {1, 0, 1}));
  EXPECT_FALSE(in_lusztig_cone_L(w, {1, 0, 1}).inside);
  EXPECT_FALSE(in_lusztig_cone_def(w, {-1, 0, 0}));
  EXPECT_EQ(in_lusztig_cone_L(w, {1, 1, 0}).coefficients, (IntVec{0, 0, 1}));
  EXPECT_THROW(in_lusztig_cone_def(w, {1, 1}), LengthMismatchError);
  EXPECT_THROW(in_lusztig_cone_L(w, {1, 1}), LengthMismatchError);
}

TEST(ConeMembership, InequalityPairs) {
  const LusztigConeInequalities ineq(a3_word());
  const std::vector<std::pair<int, int>> want = {{1, 3}, {3, 5}, {2, 6}};
  EXPECT_EQ(ineq.pairs(), want);
}

TEST(ConeMembership, DefinitionMatchesOracleAndLTestOnBox) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Int> d(-2, 5);
  for (const auto& w : small_words()) {
    if (w.length() > 6) continue;
    const IntMatrix l = matrix_L(w);
    for (int t = 0; t < 2000; ++t) {
      IntVec c(static_cast<std::size_t>(w.length()));
      for (auto& x : c) x = d(rng);
      const bool def = in_lusztig_cone_def(w, c);
      ASSERT_EQ(def, cone_oracle(w.cartan().matrix(), w.letters(), c));
      ASSERT_EQ(def, membership_L(l, c).inside) << format_word(w.letters()) << " at " << join(c);
    }
  }
}

TEST(SimpleCoroot, Examples) {
  const ReducedWord w = a3_word();
  EXPECT_TRUE(maps_to_simple_coroot(w, 1));
  int simple = 0;
  for (int j = 1; j <= w.length(); ++j) simple += maps_to_simple_coroot(w, j) ? 1 : 0;
  EXPECT_EQ(simple, 3);  // beta_j^vee runs over the positive coroots once each
}
