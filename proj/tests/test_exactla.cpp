#include <gtest/gtest.h>

#include <random>

#include "lieforge/subspace.hpp"
#include "oracles.hpp"

using namespace lieforge;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("0/7"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(Integer("41152263004115226300411522630")));
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "-", "1/0", "+1", "1/-2", "a", "1.5", "- 1", "1/", "/2", "1//2", "1 "}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Elimination, RankMatchesMinorOracle) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const Matrix a = oracles::random_matrix(rng, rows, cols, static_cast<int>(rng() % 80));
    EXPECT_EQ(rank(a), oracles::minor_rank(a)) << "trial " << trial;
  }
}

TEST(Elimination, RrefIsReducedAndIdempotent) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = oracles::random_matrix(rng, 4, 6);
    const EchelonForm e = rref(a);
    ASSERT_EQ(e.pivots.size(), e.rank);
    for (std::size_t i = 0; i < e.rank; ++i) {
      EXPECT_EQ(e.reduced(i, e.pivots[i]), 1);
      for (std::size_t r = 0; r < e.rank; ++r) {
        if (r != i) {
          EXPECT_EQ(e.reduced(r, e.pivots[i]), 0);
        }
      }
      if (i > 0) {
        EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
      }
    }
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
  }
}

TEST(Elimination, RowOrderDoesNotChangeRref) {
  std::mt19937 rng(11);
  const Matrix a = oracles::random_matrix(rng, 5, 5, 50);
  Matrix b(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) b(r, c) = a(4 - r, c);
  EXPECT_EQ(rref(a).reduced, rref(b).reduced);
}

TEST(Elimination, NullspaceHasComplementaryDimension) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = oracles::random_matrix(rng, 3, 5, 30);
    const Subspace k = nullspace(a);
    EXPECT_EQ(k.dim() + oracles::minor_rank(a), 5u);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Elimination, SolveConsistentAndInconsistent) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = oracles::random_matrix(rng, 4, 3, 30);
    const Vector x = oracles::random_matrix(rng, 3, 1, 0).col(0);
    const Vector b = a * x;
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * *sol, b);
  }
  // Rows 0 and 1 are equal, so b must agree there.
  const Matrix a = Matrix::from_rows({{1, 2}, {1, 2}, {0, 1}});
  EXPECT_FALSE(solve(a, Vector{1, 2, 0}).has_value());
  const auto sol = solve(a, Vector{3, 3, 1});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, (Vector{1, 1}));
}

TEST(Elimination, SolveVanishesOffPivots) {
  // x + y = 2 has solutions (2 - t, t); the canonical one has y = 0.
  const Matrix a = Matrix::from_rows({{1, 1}});
  const auto sol = solve(a, Vector{2});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol, (Vector{2, 0}));
}

TEST(RowReducer, MergesDuplicateTermsAndStopsAtFullRank) {
  RowReducer r(3);
  r.add_terms({{0, Rational(1)}, {0, Rational(1)}, {2, Rational(-1, 2)}});  // 2 x0 - x2/2
  r.add_terms({{1, Rational(3)}});
  r.add_terms({{0, Rational(4)}, {2, Rational(-1)}});  // dependent
  EXPECT_EQ(r.rank(), 2u);
  const Subspace k = nullspace(r);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.basis_vector(0), (Vector{1, 0, 4}));  // RREF-normalized
  r.add_terms({{0, Rational(1)}});
  EXPECT_EQ(r.rank(), 3u);
  r.add_terms({{1, Rational(5)}});
  EXPECT_EQ(r.rank(), 3u);
}

TEST(Subspace, SpanIsCanonical) {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vector{3, 5, 2}));
  EXPECT_FALSE(a.contains(Vector{1, 0, 0}));
  const Vector v{3, 5, 2};
  EXPECT_EQ(a.combine(a.coordinates(v)), v);
  EXPECT_THROW(a.coordinates(Vector{1, 0, 0}), Error);
  EXPECT_EQ((a + Subspace::span(3, {{1, 0, 0}})).dim(), 3u);
  EXPECT_TRUE(Subspace::whole(3).contains(a));
}

TEST(Matrix, ShapeErrors) {
  const Matrix a(2, 3);
  const Matrix b(2, 2);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * a, Error);
  EXPECT_THROW(a * Vector(2), Error);
}
