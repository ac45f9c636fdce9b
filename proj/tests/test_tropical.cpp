#include <random>

#include <gtest/gtest.h>

#include "lusztig/tropical.hpp"

using namespace lusztig;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

Int trop(const std::string& text, const IntVec& p, const std::vector<std::string>& vars = kXY) {
  return trop_eval(tropicalize(parse_expr(text, vars)), p);
}

// Random subtraction-free expression over x, y, z with small exponents.
std::string random_expr(std::mt19937_64& rng, int depth) {
  static const char* atoms[] = {"x", "y", "z", "2", "3"};
  if (depth == 0 || rng() % 3 == 0) return atoms[rng() % 5];
  const std::string a = random_expr(rng, depth - 1);
  const std::string b = random_expr(rng, depth - 1);
  switch (rng() % 4) {
    case 0: return "(" + a + "+" + b + ")";
    case 1: return "(" + a + "*" + b + ")";
    case 2: return "(" + a + "/" + b + ")";
    default: return "(" + a + ")^" + std::to_string(rng() % 3 + 1);
  }
}

}  // namespace

TEST(Tropicalize, WorkedExampleValues) {
  const std::string f = "(x^3+y^3)/(x+y)";
  EXPECT_EQ(trop(f, {2, 5}), 4);
  EXPECT_EQ(trop(f, {3, 3}), 6);
  EXPECT_EQ(trop(f, {-1, 4}), -2);
}

TEST(Tropicalize, Basics) {
  EXPECT_EQ(trop("x*y", {2, 3}), 5);
  EXPECT_EQ(trop("x+y", {2, 3}), 2);
  EXPECT_EQ(trop("1/x", {2, 3}), -2);
  EXPECT_EQ(trop("x^(2)", {2, 3}), 4);
  EXPECT_EQ(trop("7", {2, 3}), 0);
  const TropicalForm k = tropicalize(parse_expr("5", kXY));
  EXPECT_EQ(k.num_exponents, (std::set<IntVec>{{0, 0}}));
  EXPECT_EQ(k.den_exponents, (std::set<IntVec>{{0, 0}}));
  EXPECT_THROW(trop("x", {1}), LengthMismatchError);
}

TEST(Tropicalize, MonomialDenominatorFolded) {
  const auto e = parse_expr("(x+y)/x", kXY);
  EXPECT_TRUE(e.den().is_one());
  EXPECT_EQ(e.num().support(), (std::set<IntVec>{{0, 0}, {-1, 1}}));
}

TEST(Parse, Errors) {
  const auto position_of = [](const std::string& text) -> std::optional<std::size_t> {
    try {
      parse_expr(text, kXY);
    } catch (const ParseError& e) {
      return e.position;
    }
    return std::nullopt;
  };
  EXPECT_EQ(position_of("x-y"), 1u);
  EXPECT_EQ(position_of("x^-1"), 2u);
  EXPECT_EQ(position_of("x+z"), 2u);
  EXPECT_EQ(position_of("0*x"), 0u);
  EXPECT_EQ(position_of("(x+y"), 4u);
  EXPECT_EQ(position_of("x y"), 2u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("x^999"), 2u);
  try {
    parse_expr("x-y", kXY);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("not subtraction-free"), std::string::npos);
  }
}

TEST(Parse, RoundTripThroughText) {
  std::mt19937_64 rng(21);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int t = 0; t < 300; ++t) {
    const std::string text = random_expr(rng, 3);
    const auto e = parse_expr(text, vars);
    const std::string printed = to_string(e);
    ASSERT_EQ(parse_expr(printed, vars), e) << text << " -> " << printed;
  }
}

TEST(Tropicalize, IsMultiplicativeAndMinAdditive) {
  // trop(f*g) = trop f + trop g, trop(f/g) = trop f - trop g, trop(f+g) = min.
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<Int> d(-6, 6);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int t = 0; t < 50; ++t) {
    const std::string f = random_expr(rng, 3), g = random_expr(rng, 3);
    const auto tf = tropicalize(parse_expr(f, vars));
    const auto tg = tropicalize(parse_expr(g, vars));
    const auto tprod = tropicalize(parse_expr("(" + f + ")*(" + g + ")", vars));
    const auto tquot = tropicalize(parse_expr("(" + f + ")/(" + g + ")", vars));
    const auto tsum = tropicalize(parse_expr("(" + f + ")+(" + g + ")", vars));
    for (int s = 0; s < 50; ++s) {
      const IntVec p = {d(rng), d(rng), d(rng)};
      const Int a = trop_eval(tf, p), b = trop_eval(tg, p);
      ASSERT_EQ(trop_eval(tprod, p), a + b) << f << " , " << g;
      ASSERT_EQ(trop_eval(tquot, p), a - b) << f << " , " << g;
      ASSERT_EQ(trop_eval(tsum, p), std::min(a, b)) << f << " , " << g;
    }
  }
}

TEST(Tropicalize, ValueIndependentOfPresentation) {
  // (x^2 + x*y)/(x) and x + y are equal rational functions.
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Int> d(-9, 9);
  for (int s = 0; s < 100; ++s) {
    const IntVec p = {d(rng), d(rng)};
    ASSERT_EQ(trop("(x^2+x*y)/x", p), trop("x+y", p));
    ASSERT_EQ(trop("(x^2+2*x*y+y^2)/(x+y)", p), trop("x+y", p));
  }
}

TEST(Substitute, MonomialComposition) {
  const auto e = parse_expr("x*y^2", kXY);
  const std::vector<std::string> uv = {"u", "v"};
  const auto got = substitute(e, {parse_expr("u/v", uv), parse_expr("v", uv)});
  EXPECT_EQ(got, parse_expr("u*v", uv));
}

TEST(ExponentMatrix, StacksRows) {
  const auto m = monomial_exponent_matrix({parse_expr("x/y^2", kXY), parse_expr("3*y", kXY)});
  EXPECT_EQ(m, (IntMatrix{{1, -2}, {0, 1}}));
  EXPECT_THROW(monomial_exponent_matrix({parse_expr("x+y", kXY)}), Error);
}
