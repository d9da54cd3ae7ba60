#include <gtest/gtest.h>

#include "cvec/errors.hpp"
#include "cvec/fixtures.hpp"
#include "cvec/laurent.hpp"
#include "helpers.hpp"

using namespace cvec;
using namespace testing_helpers;

namespace {

LaurentPoly mono(std::initializer_list<std::int64_t> e, long c = 1) {
  return LaurentPoly::monomial(e.size(), Exponent(e), Integer(c));
}

}  // namespace

TEST(LaurentPoly, Arithmetic) {
  LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  LaurentPoly s = x + y;
  EXPECT_EQ(s * s, x * x + mono({1, 1}, 2) + y * y);
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s.pow(3).size(), 4u);
  EXPECT_EQ(exact_divide(s * s, s), s);
  EXPECT_EQ(exact_divide(s, mono({1, 0})), mono({0, 0}) + mono({-1, 1}));
  EXPECT_THROW(exact_divide(x, s), NonExactDivision);
}

TEST(ExchangeStep, A2FirstVariable) {
  LaurentSeed s = exchange_step(laurent_root(fixture_matrix("a2")), 0);
  // (x2 + x3) / x1, x3 the first coefficient variable.
  EXPECT_EQ(s.variables[0], mono({-1, 1, 0, 0}) + mono({-1, 0, 1, 0}));
  EXPECT_EQ(s.variables[1], LaurentPoly::variable(4, 1));
  EXPECT_EQ(s.word, (std::vector<std::size_t>{0}));
}

TEST(ExchangeStep, Involution) {
  for (const auto& name : matrix_fixture_names()) {
    LaurentSeed root = laurent_root(fixture_matrix(name));
    for (std::size_t k = 0; k < root.variables.size(); ++k) {
      LaurentSeed back = exchange_step(exchange_step(root, k), k);
      EXPECT_EQ(back.variables, root.variables) << name;
      EXPECT_EQ(back.matrix, root.matrix) << name;
    }
  }
}

TEST(ExchangeStep, RankOne) {
  LaurentSeed s = exchange_step(laurent_root(IntMatrix{{0}}), 0);
  EXPECT_EQ(s.variables[0], mono({-1, 1}) + mono({-1, 0}));
}

TEST(GVector, Examples) {
  IntMatrix b = fixture_matrix("a2");
  EXPECT_EQ(g_vector(LaurentPoly::variable(4, 0), b), ivec({1, 0}));
  EXPECT_EQ(g_vector(mono({-1, 1, 0, 0}) + mono({-1, 0, 1, 0}), b), ivec({-1, 1}));
  EXPECT_EQ(g_vector(mono({1, 1, 0, 0}), b), ivec({1, 1}));
  EXPECT_THROW(g_vector(mono({1, 0, 0, 0}) + mono({0, 1, 0, 0}), b), NotHomogeneous);
}

TEST(Walk, EmptyWordIsRoot) {
  IntMatrix b = fixture_matrix("a3");
  LaurentSeed w = walk(b, {});
  LaurentSeed r = laurent_root(b);
  EXPECT_EQ(w.variables, r.variables);
  EXPECT_EQ(w.g_matrix(), IntMatrix::identity(3));
}

TEST(Walk, PentagonReturnsVariables) {
  IntMatrix b = fixture_matrix("a2");
  std::vector<std::size_t> word{0, 1, 0, 1, 0};
  LaurentSeed w = walk(b, word);
  // After five steps the variables are the initial ones, swapped.
  EXPECT_EQ(w.variables[0], LaurentPoly::variable(4, 1));
  EXPECT_EQ(w.variables[1], LaurentPoly::variable(4, 0));
}

TEST(CrossCheck, A2FullClass) {
  auto r = cross_check_g(fixture_matrix("a2"), 100);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.distinct_variables, 5u);
}

TEST(CrossCheck, A3DepthSix) {
  auto r = cross_check_g(fixture_matrix("a3"), 100000, 6);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_TRUE(r.duplicates.empty());
  EXPECT_EQ(r.distinct_variables, 9u);
}

TEST(CrossCheck, B2Skew) {
  auto r = cross_check_g(fixture_matrix("b2"), 100);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.distinct_variables, 6u);
}

TEST(Laurent, CoefficientExponentsNonnegative) {
  IntMatrix b = fixture_matrix("markov");
  LaurentSeed s = walk(b, std::vector<std::size_t>{0, 1, 2, 0});
  for (const auto& v : s.variables) EXPECT_TRUE(v.polynomial_in_tail(3));
}
