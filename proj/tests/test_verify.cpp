#include <gtest/gtest.h>

#include "lusztig/report_json.hpp"
#include "lusztig/verify.hpp"

using namespace lusztig;

TEST(VerifyWord, AllChecksPassOnSmallTypes) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}}) {
    const CartanSpec c = cartan_from_type(f, n);
    for (const auto& rep : verify_words(c, enumerate_reduced_words(c))) {
      std::vector<std::string> names;
      for (const auto& [name, r] : rep.checks) {
        names.push_back(name);
        EXPECT_TRUE(r.pass) << f << n << " " << format_word(rep.word) << " " << name << ": " << r.witness;
      }
      EXPECT_EQ(names, check_names());
      EXPECT_TRUE(rep.all_pass());
    }
  }
}

TEST(VerifyWord, ConventionsOnNonSimplyLaced) {
  for (char f : {'B', 'G'}) {
    const CartanSpec c = cartan_from_type(f, 2);
    for (const auto& rep : verify_words(c, enumerate_reduced_words(c))) {
      EXPECT_TRUE(rep.conventions.primary);
      EXPECT_FALSE(rep.conventions.transposed_cartan);
      EXPECT_FALSE(rep.conventions.coincide);
    }
  }
  const CartanSpec a3 = cartan_from_type('A', 3);
  const auto rep = verify_word(ReducedWord(a3, {2, 3, 2, 1, 2, 3}));
  EXPECT_TRUE(rep.conventions.coincide);
  EXPECT_TRUE(rep.conventions.primary);
}

TEST(VerifyWord, BoxCheckReportsWitnessForWrongMatrix) {
  const ReducedWord w(cartan_from_type('A', 2), {1, 2, 1});
  IntMatrix bad = matrix_L(w);
  bad(1, 2) = 0;  // drop the only constraint on c_3 coming from row 2
  const CheckResult r = detail::cone_box_check(w, bad, matrix_X(w), BoxSpec{-1, 2}, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("point ("), std::string::npos);
  EXPECT_TRUE(detail::cone_box_check(w, matrix_L(w), matrix_X(w), BoxSpec{-2, 5}, 1).pass);
}

TEST(VerifyWord, SampledBoxStillChecksGenerators) {
  const ReducedWord w(cartan_from_type('B', 3), enumerate_reduced_words(cartan_from_type('B', 3), 1).front());
  BoxSpec box = BoxSpec::radius(2);
  box.exhaustive_limit = 1000;
  box.sample_points = 2000;
  EXPECT_TRUE(detail::cone_box_check(w, matrix_L(w), matrix_X(w), box, 3).pass);
}

TEST(VerifyWords, DeterministicOrderAcrossThreadCounts) {
  const CartanSpec a3 = cartan_from_type('A', 3);
  const auto words = enumerate_reduced_words(a3);
  VerifyOptions opts;
  opts.check_cone = false;
  const auto one = verify_words(a3, words, opts, 1);
  const auto many = verify_words(a3, words, opts, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].word, words[i]);
    EXPECT_EQ(to_json(one[i]), to_json(many[i]));
  }
}

TEST(ReportJson, FieldOrderAndContent) {
  const auto rep = verify_word(ReducedWord(cartan_from_type('A', 2), {1, 2, 1}));
  const auto j = to_json(rep);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"cartan", "word", "matrices", "checks", "conventions", "pass"}));
  EXPECT_EQ(j["cartan"]["type"], "A2");
  EXPECT_EQ(j["word"], (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(j["matrices"]["L"][1], (std::vector<Int>{0, 0, 1}));
  EXPECT_EQ(j["checks"]["LX_identity"]["pass"], true);
  EXPECT_FALSE(j["checks"]["LX_identity"].contains("witness"));
  EXPECT_EQ(j["pass"], true);
}

TEST(RandomWeights, SeededAndDominant) {
  const auto a = random_dominant_weights(3, 20, 3, 9);
  EXPECT_EQ(a, random_dominant_weights(3, 20, 3, 9));
  for (const auto& w : a) {
    EXPECT_TRUE(is_dominant(w));
    for (Int x : w.coords()) EXPECT_LE(x, 3);
  }
}
