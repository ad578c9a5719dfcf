#include <gtest/gtest.h>

#include "lieforge/constructions.hpp"

using namespace lieforge;

namespace {

// Non-perfect split fixtures, including one with a nonabelian radical.
std::vector<SplitAlgebra> nonperfect_splits() {
  std::vector<SplitAlgebra> out;
  for (const char* name : {"aff1", "abelian:1", "abelian:2", "sl2-sum:1,0", "sl2-sum:2,0", "nonperfect-delta"}) {
    const Fixture f = fixture(name);
    out.push_back(split_from_total(f.algebra, *f.s_dim));
  }
  out.push_back(semidirect(sl2(), trivial_rep(sl2(), 2), aff1(), "sl2+aff1"));
  out.push_back(abelianize_radical(oscillator()));
  return out;
}

}  // namespace

TEST(FGDelta, ZeroProductGivesZeroData) {
  const SplitAlgebra sp = sl2_semidirect({2, 0});
  const FGDelta d = decompose(sp, BilinearMap(7, 7, 7));
  EXPECT_EQ(d, FGDelta::zero(sp));
  EXPECT_TRUE(compose(sp, d).is_zero());
  EXPECT_TRUE(check_conditions(sp, d).ok());
}

TEST(FGDelta, DeltaFixtureDecomposesToDeltaOnly) {
  const DeltaFixture f = nonperfect_delta();
  const FGDelta d = decompose(f.split, f.product);
  EXPECT_TRUE(d.F.is_zero());
  EXPECT_TRUE(d.G.is_zero());
  EXPECT_EQ(d.delta, f.recipe.delta);
  EXPECT_TRUE(check_conditions(f.split, d).ok());
  EXPECT_EQ(compose(f.split, d), f.product);
}

TEST(FGDelta, RoundTripOnEveryAbdBasisMember) {
  for (const SplitAlgebra& sp : nonperfect_splits()) {
    const SpaceReport sr = abd_space(sp.total);
    ASSERT_GT(sr.dimension, 0u) << sp.total.name();
    for (const auto& phi : sr.basis) {
      const FGDelta d = decompose(sp, phi);
      EXPECT_EQ(d.abelian_radical, sp.radical_abelian());
      const Report cond = check_conditions(sp, d);
      EXPECT_TRUE(cond.ok()) << sp.total.name();
      EXPECT_EQ(compose(sp, d), phi) << sp.total.name();
      // The recovered data determine the same product again.
      EXPECT_EQ(compose(sp, decompose(sp, compose(sp, d))), phi);
    }
  }
}

TEST(FGDelta, GeneralConditionsSeeRadicalBracket) {
  // sl2 x aff1: the radical is nonabelian, so conditions (1)-(5) apply.
  const SplitAlgebra sp = semidirect(sl2(), trivial_rep(sl2(), 2), aff1());
  FGDelta d = FGDelta::zero(sp);
  d.delta[0](0, 0) = 1;  // Delta(x) x = x is not a derivation of aff1
  const Report r = check_conditions(sp, d);
  EXPECT_TRUE(r.has("(Delta)"));
  EXPECT_THROW(compose(sp, d), ViolationError);
}

TEST(FGDelta, IdentityGOnV2Fails) {
  const SplitAlgebra sp = sl2_semidirect({2});
  FGDelta d = FGDelta::zero(sp);
  d.G = Matrix::identity(3);
  const Report r = check_conditions(sp, d);
  EXPECT_TRUE(r.has_witness("(3)", {1, 2, 0}));  // (e, f, v0)
  try {
    compose(sp, d);
    FAIL() << "expected rejection";
  } catch (const ViolationError& e) {
    EXPECT_TRUE(e.report().has("(3)"));
  }
}

TEST(FGDelta, AsymmetricFIsRejected) {
  const SplitAlgebra sp = sl2_semidirect({1});
  FGDelta d = FGDelta::zero(sp);
  d.F(0, 2) = 1;
  EXPECT_TRUE(check_conditions(sp, d).has_witness("(1)", {0, 2}));
}

TEST(FGDelta, ImageOutsideRadicalIsAnError) {
  // With a non-semisimple "s" block, e0∘e0 = e0 is a valid A_BD-structure
  // whose values leave the radical block.
  const SplitAlgebra sp = split_from_total(LieAlgebra::abelian(2), 1);
  BilinearMap phi(2, 2, 2);
  phi(0, 0, 0) = 1;
  try {
    decompose(sp, phi);
    FAIL() << "expected rejection";
  } catch (const ViolationError& e) {
    EXPECT_TRUE(e.report().has_witness("image-in-radical", {0, 0}));
  }
}

TEST(FGDelta, WhiteheadFailureIsAnError) {
  const SplitAlgebra sp = split_from_total(LieAlgebra::abelian(2), 1);
  BilinearMap phi(2, 2, 2);
  phi(0, 0, 1) = 1;  // a -> e0∘a is not psi(a) r for the zero action
  EXPECT_THROW(decompose(sp, phi), ViolationError);
}

TEST(FGDelta, NonBiderivationIsRejected) {
  const SplitAlgebra sp = sl2_semidirect({1});
  BilinearMap phi(5, 5, 5);
  phi(3, 3, 4) = 1;
  EXPECT_THROW(decompose(sp, phi), ViolationError);
}

TEST(FGDelta, AdmissibleFSpace) {
  for (const SplitAlgebra& sp : nonperfect_splits()) {
    const Subspace fs = admissible_f_space(sp);
    for (const auto& v : fs.basis_vectors()) {
      FGDelta d = FGDelta::zero(sp);
      d.F = unflatten(v, sp.r_dim(), sp.s_dim());
      EXPECT_FALSE(check_conditions(sp, d).has("(1)"));
    }
    for (const auto& phi : abd_space(sp.total).basis) EXPECT_TRUE(fs.contains(flatten(decompose(sp, phi).F)));
  }
}

TEST(FGDelta, AdmissibleFOnIrreducibleAndTrivialModules) {
  // phi = 0 imposes nothing; on V(m) only F = 0 survives condition (1).
  EXPECT_EQ(admissible_f_space(sl2_semidirect({0})).dim(), 3u);
  for (std::size_t m = 1; m <= 4; ++m) EXPECT_EQ(admissible_f_space(sl2_semidirect({m})).dim(), 0u) << m;
}
