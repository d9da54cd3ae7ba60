#include <gtest/gtest.h>

#include "cvec/algebra.hpp"
#include "cvec/errors.hpp"
#include "cvec/fixtures.hpp"

using namespace cvec;

namespace {

AlgebraPresentation commutative_square() {
  AlgebraPresentation p;
  p.quiver = Quiver(4, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}});
  p.relations = {{{Rational(1), {"a", "b"}}, {Rational(-1), {"c", "d"}}}};
  p.nilpotency_bound = 3;
  return p;
}

void expect_associative(const PathBasis& b) {
  const std::size_t n = b.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        AlgElement x = b.unit(i), y = b.unit(j), z = b.unit(k);
        ASSERT_EQ(b.multiply(b.multiply(x, y), z), b.multiply(x, b.multiply(y, z)));
      }
}

}  // namespace

TEST(Basis, PathAlgebraOfOneArrow) {
  PathBasis b = build_basis(linear_path_algebra(2));
  EXPECT_EQ(b.dimension(), 3u);
  EXPECT_EQ(b.nilpotency_bound(), 2u);
}

TEST(Basis, NakayamaRadSquareZero) {
  PathBasis b = build_basis(cyclic_nakayama(3));
  EXPECT_EQ(b.dimension(), 6u);
  for (std::size_t i = 3; i < 6; ++i) EXPECT_EQ(b.element(i).length(), 1u);
}

TEST(Basis, CommutativeSquare) {
  PathBasis b = build_basis(commutative_square());
  EXPECT_EQ(b.dimension(), 9u);
  AlgElement ab = b.normal_form(Path{0, 3, {0, 1}});
  AlgElement cd = b.normal_form(Path{0, 3, {2, 3}});
  EXPECT_EQ(ab, cd);
}

TEST(Basis, Associativity) {
  expect_associative(build_basis(linear_path_algebra(3)));
  expect_associative(build_basis(cyclic_nakayama(3)));
  expect_associative(build_basis(commutative_square()));
  expect_associative(build_basis(fixture_algebra("kronecker")));
}

TEST(Basis, Idempotents) {
  PathBasis b = build_basis(cyclic_nakayama(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      AlgElement p = b.multiply(b.unit(b.idempotent(i)), b.unit(b.idempotent(j)));
      EXPECT_EQ(p, i == j ? b.unit(b.idempotent(i)) : b.zero());
    }
}

TEST(Basis, RadicalIsNilpotent) {
  PathBasis b = build_basis(linear_path_algebra(3));
  // Product of L radical basis elements vanishes.
  for (std::size_t i = 3; i < b.dimension(); ++i)
    for (std::size_t j = 3; j < b.dimension(); ++j)
      for (std::size_t k = 3; k < b.dimension(); ++k)
        EXPECT_EQ(b.multiply(b.multiply(b.unit(i), b.unit(j)), b.unit(k)), b.zero());
}

TEST(HomProj, OneArrow) {
  PathBasis b = build_basis(linear_path_algebra(2));
  EXPECT_EQ(hom_proj(b, 0, 0).size(), 1u);
  const std::size_t h21 = hom_proj(b, 1, 0).size();
  const std::size_t h12 = hom_proj(b, 0, 1).size();
  EXPECT_EQ(std::min(h21, h12), 0u);
  EXPECT_EQ(std::max(h21, h12), 1u);
  // Hom(P2, P1) = e1 A e2 contains the arrow.
  EXPECT_EQ(h21, 1u);
}

TEST(HomProj, NakayamaAtMostOne) {
  PathBasis b = build_basis(cyclic_nakayama(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_LE(hom_proj(b, i, j).size(), 1u);
}

TEST(Opposite, ReversesAndInvolutes) {
  AlgebraPresentation p = linear_path_algebra(2);
  AlgebraPresentation op = opposite(p);
  EXPECT_EQ(op.quiver.arrow(0).source, 1u);
  EXPECT_EQ(op.quiver.arrow(0).target, 0u);
  EXPECT_EQ(opposite(op), p);
  AlgebraPresentation n = cyclic_nakayama(3);
  EXPECT_EQ(build_basis(opposite(n)).dimension(), 6u);
  EXPECT_EQ(opposite(opposite(n)), n);
  EXPECT_EQ(build_basis(opposite(commutative_square())).dimension(), 9u);
}

TEST(Algebra, OppositeCacheAndAntiIsomorphism) {
  AlgebraPtr a = Algebra::create(commutative_square());
  AlgebraPtr op = a->opposite();
  EXPECT_TRUE(op->opposite()->same_as(*a));
  const PathBasis& b = a->basis();
  for (std::size_t i = 0; i < b.dimension(); ++i)
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      AlgElement lhs = a->to_opposite(b.multiply(b.unit(i), b.unit(j)));
      AlgElement rhs = op->basis().multiply(a->to_opposite(b.unit(j)), a->to_opposite(b.unit(i)));
      ASSERT_EQ(lhs, rhs);
    }
}

TEST(Admissibility, Errors) {
  EXPECT_THROW(Quiver(2, {{"a", 0, 1}, {"a", 0, 1}}), NotAdmissible);
  AlgebraPresentation cyc;
  cyc.quiver = Quiver(1, {{"x", 0, 0}});
  EXPECT_THROW(build_basis(cyc), NotAdmissible);
  AlgebraPresentation shortrel = linear_path_algebra(2);
  shortrel.relations = {{{Rational(1), {"a1"}}}};
  EXPECT_THROW(build_basis(shortrel), NotAdmissible);
  AlgebraPresentation mixed = commutative_square();
  mixed.relations = {{{Rational(1), {"a", "b"}}, {Rational(1), {"c"}}}};
  EXPECT_THROW(build_basis(mixed), NotAdmissible);
  EXPECT_THROW(Quiver(2, {{"a", 0, 5}}), IndexOutOfRange);
}
