#include <gtest/gtest.h>

#include "../support.hpp"
#include "higherk/homology.hpp"
#include "higherk/module.hpp"

using namespace higherk;
using higherk::testing::linear_a;

namespace {

struct A2 {
  AlgebraPtr a = linear_a(2);
  Representation s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  Representation p1 = indecomposable_projective(a, 0), p2 = indecomposable_projective(a, 1);
};

}  // namespace

TEST(Representation, RejectsWrongShape) {
  auto a = linear_a(2);
  EXPECT_THROW(Representation(a, {1, 1}, {RationalMatrix(2, 1)}), Error);
}

TEST(Representation, RejectsBrokenRelation) {
  auto a = linear_a(3, true);
  // (1,1,1) with both maps nonzero violates a1 a2 = 0
  EXPECT_THROW(Representation(a, {1, 1, 1}, {RationalMatrix{{1}}, RationalMatrix{{1}}}), Error);
}

TEST(Morphism, RejectsNonIntertwiner) {
  A2 x;
  // P1 -> S1 must vanish at vertex 2 anyway; P1 -> P1 with maps (1, 0) is not a morphism
  EXPECT_THROW(ModuleMorphism(x.p1, x.p1, {RationalMatrix{{1}}, RationalMatrix{{0}}}), Error);
}

TEST(Hom, Examples) {
  A2 x;
  EXPECT_EQ(hom_dimension(x.p1, x.p2), 0u);
  EXPECT_EQ(hom_dimension(x.p2, x.p1), 1u);
  EXPECT_EQ(hom_dimension(x.p1, x.s1), 1u);
  EXPECT_GE(hom_dimension(x.p1, x.p1), 1u);
  EXPECT_EQ(hom_dimension(Representation::zero(x.a), x.p1), 0u);
  EXPECT_EQ(hom_dimension(x.p1, Representation::zero(x.a)), 0u);
}

TEST(Kernel, Examples) {
  A2 x;
  EXPECT_TRUE(kernel(ModuleMorphism::identity(x.p1)).object.is_zero());
  EXPECT_EQ(kernel(ModuleMorphism::zero(x.p1, x.s1)).object.dims(), x.p1.dims());
  auto cover = hom_basis(x.p1, x.s1).at(0);
  auto k = kernel(cover);
  EXPECT_EQ(k.object.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(compose(cover, k.inclusion).is_zero());
}

TEST(Cokernel, Examples) {
  A2 x;
  EXPECT_TRUE(cokernel(ModuleMorphism::identity(x.p1)).object.is_zero());
  EXPECT_EQ(cokernel(ModuleMorphism::zero(x.s1, x.p1)).object.dims(), x.p1.dims());
  auto socle = hom_basis(x.s2, x.p1).at(0);
  auto q = cokernel(socle);
  EXPECT_TRUE(is_isomorphic(q.object, x.s1));
}

TEST(DirectSum, DimsAndHomAdditivity) {
  A2 x;
  std::vector<Representation> parts = {x.p1, Representation::zero(x.a)};
  EXPECT_TRUE(is_isomorphic(direct_sum(parts, x.a), x.p1));
  std::vector<Representation> two = {x.p1, x.s2};
  auto s = direct_sum(two, x.a);
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(hom_dimension(s, x.p1), hom_dimension(x.p1, x.p1) + hom_dimension(x.s2, x.p1));
  EXPECT_EQ(composition_vector(s), (std::vector<long>{1, 2}));
}

TEST(CompositionVector, Examples) {
  A2 x;
  EXPECT_EQ(composition_vector(x.s2), (std::vector<long>{0, 1}));
  EXPECT_EQ(composition_vector(x.p1), (std::vector<long>{1, 1}));
}

TEST(Decompose, Projective) {
  A2 x;
  auto d = decompose(x.p1);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_EQ(d.summands[0].multiplicity, 1u);
  EXPECT_TRUE(is_isomorphic(d.summands[0].module, x.p1));
}

TEST(Decompose, RepeatedSimple) {
  A2 x;
  std::vector<Representation> parts = {x.s1, x.s1};
  auto d = decompose(direct_sum(parts, x.a));
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_EQ(d.summands[0].multiplicity, 2u);
  EXPECT_TRUE(is_isomorphic(d.summands[0].module, x.s1));
}

TEST(Decompose, ScrambledSum) {
  A2 x;
  Rng rng(99);
  std::vector<Representation> parts = {x.p1, x.s2};
  auto m = higherk::testing::scramble(rng, direct_sum(parts, x.a));
  auto more = higherk::testing::scramble(rng, m);
  auto d = decompose(more);
  ASSERT_EQ(d.summands.size(), 2u);
  bool has_p1 = false, has_s2 = false;
  for (const auto& s : d.summands) {
    has_p1 = has_p1 || is_isomorphic(s.module, x.p1);
    has_s2 = has_s2 || is_isomorphic(s.module, x.s2);
  }
  EXPECT_TRUE(has_p1 && has_s2);
  EXPECT_TRUE(d.witness.is_isomorphism());
  EXPECT_TRUE(decompose(Representation::zero(x.a)).summands.empty());
}

TEST(Decompose, IdempotentOnSummands) {
  auto a = linear_a(3);
  Rng rng(5);
  std::vector<Representation> parts = {indecomposable_projective(a, 0), indecomposable_injective(a, 1),
                                       simple_module(a, 1)};
  auto d = decompose(higherk::testing::scramble(rng, direct_sum(parts, a)));
  for (const auto& s : d.summands) {
    auto again = decompose(s.module);
    ASSERT_EQ(again.summands.size(), 1u);
    EXPECT_EQ(again.summands[0].multiplicity, 1u);
  }
}

TEST(Isomorphism, Examples) {
  A2 x;
  EXPECT_TRUE(is_isomorphic(x.p1, x.p1));
  EXPECT_FALSE(is_isomorphic(x.s1, x.s2));
  std::vector<Representation> parts = {x.s1, x.s2};
  EXPECT_FALSE(is_isomorphic(x.p1, direct_sum(parts, x.a)));
}

TEST(Radical, EndOfIndecomposable) {
  auto a = linear_a(3, true);
  auto p = indecomposable_projective(a, 0);
  EXPECT_EQ(endomorphism_top_dimension(p), 1u);
  std::vector<Representation> parts = {p, p};
  EXPECT_EQ(endomorphism_top_dimension(direct_sum(parts, a)), 4u);
  EXPECT_TRUE(is_certified_indecomposable(p));
}

TEST(FactorThroughMono, RecoversMap) {
  A2 x;
  auto inc = hom_basis(x.s2, x.p1).at(0);
  auto f = compose(inc, ModuleMorphism::identity(x.s2));
  auto g = factor_through_mono(f, inc);
  EXPECT_EQ(compose(inc, g).flatten(), f.flatten());
  EXPECT_THROW(factor_through_mono(ModuleMorphism::identity(x.p1), inc), Error);
}

TEST(Dual, Examples) {
  A2 x;
  auto d = dual(x.p1);
  EXPECT_EQ(d.dims(), x.p1.dims());
  EXPECT_TRUE(is_isomorphic(d, indecomposable_injective(x.a->opposite(), 0)));
  EXPECT_TRUE(is_isomorphic(dual(x.s1), simple_module(x.a->opposite(), 0)));
  EXPECT_TRUE(is_isomorphic(dual(dual(x.p1)), x.p1));
}
