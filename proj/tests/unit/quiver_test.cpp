#include <gtest/gtest.h>

#include "../support.hpp"
#include "higherk/module.hpp"

using namespace higherk;
using higherk::testing::linear_a;

TEST(BuildAlgebra, A2) {
  auto a = linear_a(2);
  EXPECT_EQ(a->dimension(), 3u);
  EXPECT_EQ(a->dimension_between(0, 1), 1u);
  EXPECT_EQ(a->dimension_between(1, 0), 0u);
}

TEST(BuildAlgebra, A3RadSquareZero) {
  auto a = linear_a(3, true);
  EXPECT_EQ(a->dimension(), 5u);
  EXPECT_EQ(a->dimension_between(0, 2), 0u);
  // the composite reduces to zero
  Path ab = make_path(a->quiver(), {"a1", "a2"});
  for (const auto& c : a->reduce(ab)) EXPECT_EQ(c, 0);
}

TEST(BuildAlgebra, SingleVertex) {
  Quiver q({"x"}, {});
  EXPECT_EQ(build_algebra(q, {}, 1)->dimension(), 1u);
}

TEST(BuildAlgebra, RejectsShortRelation) {
  Quiver q({"1", "2"}, {{"a", "1", "2"}});
  std::vector<PathExpression> rels = {{{PathTerm{1, make_path(q, {"a"})}}}};
  try {
    build_algebra(q, rels, 2);
    FAIL() << "accepted a length-one relation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedRelation);
  }
}

TEST(BuildAlgebra, RejectsNonAdmissibleBound) {
  // A3 without relations has a surviving path of length 2
  Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  try {
    build_algebra(q, {}, 2);
    FAIL() << "accepted a bound below the Loewy length";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
  }
}

TEST(BuildAlgebra, RejectsCycleWithoutRelations) {
  Quiver q({"1"}, {{"x", "1", "1"}});
  EXPECT_THROW(build_algebra(q, {}, 3), Error);
}

TEST(BuildAlgebra, CommutativeSquare) {
  // 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd: one path 1 -> 4 survives
  Quiver q({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}});
  std::vector<PathExpression> rels = {
      {{PathTerm{1, make_path(q, {"a", "b"})}, PathTerm{-1, make_path(q, {"c", "d"})}}}};
  auto a = build_algebra(q, rels, 3);
  EXPECT_EQ(a->dimension_between(0, 3), 1u);
  EXPECT_EQ(a->dimension(), 4u + 4u + 1u);
}

TEST(Projectives, DimensionVectors) {
  auto a2 = linear_a(2);
  EXPECT_EQ(indecomposable_projective(a2, 0).dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(indecomposable_projective(a2, 1).dims(), (std::vector<std::size_t>{0, 1}));
  auto a3 = linear_a(3, true);
  EXPECT_EQ(indecomposable_projective(a3, 0).dims(), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(Injectives, DimensionVectors) {
  auto a2 = linear_a(2);
  EXPECT_EQ(indecomposable_injective(a2, 1).dims(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(indecomposable_injective(a2, 0).dims(), (std::vector<std::size_t>{1, 0}));
  Quiver q({"x"}, {});
  auto k = build_algebra(q, {}, 1);
  EXPECT_EQ(indecomposable_injective(k, 0), indecomposable_projective(k, 0));
}

TEST(Injectives, MatchDualOfOppositeProjective) {
  for (auto a : {linear_a(3), linear_a(3, true)})
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      auto i = indecomposable_injective(a, v);
      auto d = dual(indecomposable_projective(a->opposite(), v));
      EXPECT_TRUE(is_isomorphic(i, d));
    }
}

TEST(Opposite, ReversesArrowsAndRelations) {
  auto a2 = linear_a(2);
  auto op = a2->opposite();
  EXPECT_EQ(op->dimension(), 3u);
  EXPECT_EQ(op->quiver().arrow(0).source, 1u);
  EXPECT_EQ(op->quiver().arrow(0).target, 0u);
  EXPECT_EQ(op->opposite()->dimension(), a2->dimension());

  auto a3 = linear_a(3, true);
  const auto& rel = a3->opposite()->relations().at(0);
  ASSERT_EQ(rel.terms.size(), 1u);
  // (a2 op)(a1 op)
  EXPECT_EQ(rel.terms[0].path.arrows, (std::vector<std::size_t>{1, 0}));
}

TEST(Paths, ConcatenationChecksEndpoints) {
  auto a = linear_a(3);
  const auto& q = a->quiver();
  Path p = make_path(q, {"a1"});
  Path r = make_path(q, {"a2"});
  EXPECT_EQ(concatenate(p, r), make_path(q, {"a1", "a2"}));
  EXPECT_THROW(concatenate(r, p), std::exception);
  EXPECT_THROW(make_path(q, {"a2", "a1"}), std::exception);
}
