#include <gtest/gtest.h>

#include "lieforge/constructions.hpp"

using namespace lieforge;

namespace {

BilinearMap aff1_square() {
  BilinearMap phi(2, 2, 2);
  phi(0, 0, 1) = 1;  // x∘x = y
  return phi;
}

}  // namespace

TEST(Constructions, FixtureCatalog) {
  struct Case {
    const char* name;
    std::size_t dim;
    bool perfect;
  };
  for (const Case& c : {Case{"sl2", 3, true}, Case{"aff1", 2, false}, Case{"abelian:4", 4, false},
                        Case{"sl2-vm:3", 7, true}, Case{"sl2-sum:1,2", 8, true}, Case{"sl2-sum:2,0", 7, false},
                        Case{"oscillator", 6, true}, Case{"nonperfect-delta", 7, false}}) {
    const Fixture f = fixture(c.name);
    EXPECT_EQ(f.algebra.dim(), c.dim) << c.name;
    EXPECT_EQ(f.algebra.name(), c.name);
    EXPECT_TRUE(validate(f.algebra).ok()) << c.name;
    EXPECT_EQ(is_perfect(f.algebra), c.perfect) << c.name;
  }
  for (const char* bad : {"sl3", "abelian:0", "abelian:", "sl2-vm:0", "sl2-vm:x", "sl2-sum:", "sl2-sum:1,,2"}) {
    EXPECT_THROW(fixture(bad), Error) << bad;
  }
}

TEST(Constructions, OscillatorStructure) {
  const SplitAlgebra osc = oscillator();
  EXPECT_TRUE(is_perfect(osc.total));
  EXPECT_FALSE(osc.radical_abelian());
  EXPECT_EQ(radical(osc.total).dim(), 3u);
  EXPECT_EQ(abd_space(osc.total).dimension, 0u);
}

TEST(Constructions, AbelianizeRadical) {
  const SplitAlgebra a = abelianize_radical(oscillator());
  EXPECT_TRUE(a.radical_abelian());
  EXPECT_TRUE(validate(a.total).ok());
  EXPECT_FALSE(is_perfect(a.total));
  EXPECT_EQ(derived_subalgebra(a.total).dim(), 5u);  // z drops out
  const SplitAlgebra v = sl2_semidirect({2});
  EXPECT_EQ(abelianize_radical(v).total, v.total);
}

TEST(Constructions, RestrictToN1) {
  const SplitAlgebra a = restrict_to_n1(sl2_semidirect({2, 0}));
  EXPECT_EQ(a.total, sl2_semidirect({2}).total);
  EXPECT_TRUE(is_perfect(a.total));
  const SplitAlgebra b = restrict_to_n1(oscillator());
  EXPECT_EQ(b.total, sl2_semidirect({1}).total);
  EXPECT_TRUE(is_perfect(b.total));
  for (const char* name : {"sl2-vm:3", "sl2-sum:1,2", "nonperfect-delta"}) {
    const Fixture f = fixture(name);
    const SplitAlgebra r = restrict_to_n1(split_from_total(f.algebra, *f.s_dim));
    EXPECT_TRUE(is_perfect(r.total)) << name;
    EXPECT_TRUE(validate(r.total).ok()) << name;
  }
}

TEST(Constructions, ExtensionOfAff1) {
  const ExtensionResult ext = bz_extension(aff1(), adjoint(aff1()), aff1_square());
  EXPECT_EQ(ext.v_dim, 1u);
  EXPECT_EQ(ext.generation_depth, 1u);
  EXPECT_EQ(ext.algebra.dim(), 3u);
  EXPECT_TRUE(validate(ext.algebra).ok());
  EXPECT_TRUE(ext.product.is_symmetric());
  EXPECT_TRUE(check_biderivation(ext.algebra, adjoint(ext.algebra), ext.product, true).ok());
  EXPECT_FALSE(ext.perfect);
  // [x, w0] = w0, the copy of y.
  EXPECT_EQ(ext.algebra.bracket_basis(0, 2), (Vector{0, 0, 1}));
  EXPECT_EQ(ext.product(0, 0, 2), 1);
}

TEST(Constructions, ExtensionOfZeroIsIdentity) {
  const ExtensionResult ext = bz_extension(sl2(), adjoint(sl2()), BilinearMap(3, 3, 3));
  EXPECT_EQ(ext.v_dim, 0u);
  EXPECT_EQ(ext.algebra, sl2());
  EXPECT_TRUE(ext.product.is_zero());
  EXPECT_TRUE(ext.perfect);
}

TEST(Constructions, ExtensionLiftsEveryAbdMember) {
  for (const char* name : {"aff1", "abelian:2", "nonperfect-delta"}) {
    const LieAlgebra g = fixture(name).algebra;
    for (const auto& phi : abd_space(g).basis) {
      const ExtensionResult ext = bz_extension(g, adjoint(g), phi);
      EXPECT_TRUE(validate(ext.algebra).ok()) << name;
      EXPECT_TRUE(check_biderivation(ext.algebra, adjoint(ext.algebra), ext.product, true).ok()) << name;
      EXPECT_GE(ext.generation_depth, 1u);
      EXPECT_LE(ext.v_dim, g.dim());
    }
  }
}

TEST(Constructions, ExtensionRejectsNonBiderivation) {
  BilinearMap phi(2, 2, 2);
  phi(0, 1, 0) = 1;
  phi(1, 0, 0) = 1;
  EXPECT_THROW(bz_extension(aff1(), adjoint(aff1()), phi), ViolationError);
}

TEST(Recipes, DeltaRecipeIsValid) {
  const DeltaFixture f = nonperfect_delta();
  EXPECT_FALSE(f.product.is_zero());
  EXPECT_TRUE(check_biderivation(f.split.total, adjoint(f.split.total), f.product, true).ok());
  // z1∘z1 = z2, sitting at total indices 5, 5 -> 6.
  EXPECT_EQ(f.product(5, 5, 6), 1);
  EXPECT_TRUE(abd_space(f.split.total).flattened(7 * 7 * 7).contains(f.product.values()));
}

TEST(Recipes, ZeroFRecipe) {
  const SplitAlgebra sp = sl2_semidirect({2});
  const RecipeResult r = recipe_product(sp, RecipeSpec{RecipeKind::F, Matrix(3, 3), {}});
  ASSERT_TRUE(r.product.has_value());
  EXPECT_TRUE(r.product->is_zero());
}

TEST(Recipes, IdentityGOnV2Fails) {
  const SplitAlgebra sp = sl2_semidirect({2});
  const RecipeResult r = recipe_product(sp, RecipeSpec{RecipeKind::G, Matrix::identity(3), {}});
  EXPECT_FALSE(r.product.has_value());
  EXPECT_TRUE(r.report.has_witness("phi(a)Gphi(a')(r)=phi(a')phi(a)G(r)", {1, 2, 0}));  // (e, f, v0)
}

TEST(Recipes, FRecipeDefect) {
  // F(f) = v0: phi(h)F(f) = v0 while phi(f)F(h) = 0.
  const SplitAlgebra sp = sl2_semidirect({1});
  Matrix F(2, 3);
  F(0, 2) = 1;
  const RecipeResult r = recipe_product(sp, RecipeSpec{RecipeKind::F, F, {}});
  EXPECT_FALSE(r.product.has_value());
  EXPECT_TRUE(r.report.has_witness("phi(a)Fa'=phi(a')Fa", {0, 2}));
}

TEST(Recipes, DeltaRecipeMustCommuteWithPhi) {
  const SplitAlgebra sp = sl2_semidirect({1, 0});
  std::vector<Matrix> delta(3, Matrix(3, 3));
  delta[2](0, 2) = 1;  // z∘z = v0, not s-equivariant
  const RecipeResult r = recipe_product(sp, RecipeSpec{RecipeKind::Delta, Matrix(), delta});
  EXPECT_FALSE(r.product.has_value());
  EXPECT_TRUE(r.report.has("Delta(r)phi(a)=phi(a)Delta(r)"));
}

TEST(Recipes, RequireAbelianRadical) {
  EXPECT_THROW(recipe_product(oscillator(), RecipeSpec{RecipeKind::F, Matrix(3, 3), {}}), Error);
}
