#include <gtest/gtest.h>

#include "../support.hpp"
#include "higherk/higher_ar.hpp"
#include "higherk/homology.hpp"

using namespace higherk;
using higherk::testing::linear_a;

namespace {

TiltingData a2_t() {
  auto a = linear_a(2);
  return make_tilting_data(a, 1, {simple_module(a, 0), simple_module(a, 1), indecomposable_projective(a, 0)},
                           {"S1", "S2", "P1"});
}

TiltingData from_data(const std::string& name) {
  return tilting_from_file(load_algebra_file(higherk::testing::data_path(name)));
}

}  // namespace

TEST(EndAlgebra, A2Blocks) {
  EndAlgebra e(a2_t());
  EXPECT_EQ(e.dimension(), 5u);
  auto g = gram_matrix(e.tilting());
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t w = 0; w < 3; ++w) EXPECT_EQ(Integer(e.block_dimension(u, w)), g(w, u));
  EXPECT_TRUE(e.is_associative());
  EXPECT_TRUE(e.has_orthogonal_idempotents());
}

TEST(EndAlgebra, IdentityIsUnit) {
  EndAlgebra e(from_data("a3_rad2.json"));
  for (std::size_t u = 0; u < e.size(); ++u)
    for (std::size_t w = 0; w < e.size(); ++w) {
      const auto n = e.block_dimension(u, w);
      for (std::size_t k = 0; k < n; ++k) {
        RationalVector x(n, Rational(0));
        x[k] = 1;
        EXPECT_EQ(e.multiply(u, u, w, e.identity(u), x), x);
        EXPECT_EQ(e.multiply(u, w, w, x, e.identity(w)), x);
      }
    }
}

TEST(EndAlgebra, CoordinatesRoundTrip) {
  EndAlgebra e(from_data("a3.json"));
  for (std::size_t u = 0; u < e.size(); ++u)
    for (std::size_t w = 0; w < e.size(); ++w)
      for (const auto& f : e.block(u, w)) {
        auto c = e.coordinates(u, w, f);
        EXPECT_EQ(e.element(u, w, c).flatten(), f.flatten());
      }
}

TEST(DAr, A2Classical) {
  auto t = a2_t();
  auto s = d_ar_sequence(t, 0);
  ASSERT_EQ(s.terms.size(), 3u);
  EXPECT_TRUE(is_isomorphic(s.terms[1], t.summands[2]));
  EXPECT_TRUE(is_isomorphic(s.terms[2], t.summands[1]));
  EXPECT_TRUE(check_d_ar_sequence(t, 0, s).all());
  EXPECT_EQ(alternating_class(s), (IntegerVector{1, 1, -1}));
}

TEST(DAr, ProjectiveInput) {
  auto t = a2_t();
  try {
    d_ar_sequence(t, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ProjectiveInput);
  }
}

// 0 -> S3 -> P2 -> P1 -> S1 -> 0 over A3 / rad^2.
TEST(DAr, RadSquareZeroLengthFour) {
  auto t = from_data("a3_rad2.json");
  std::size_t s1 = t.size();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.summands[i].dims() == std::vector<std::size_t>{1, 0, 0}) s1 = i;
  ASSERT_LT(s1, t.size());
  auto s = d_ar_sequence(t, s1);
  ASSERT_EQ(s.terms.size(), 4u);
  EXPECT_EQ(s.terms[1].dims(), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(s.terms[2].dims(), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(s.terms[3].dims(), (std::vector<std::size_t>{0, 0, 1}));
  auto c = check_d_ar_sequence(t, s1, s);
  EXPECT_TRUE(c.exact);
  EXPECT_TRUE(c.end_is_tau);
  EXPECT_TRUE(c.hom_complexes);
  EXPECT_TRUE(c.minimal);
  EXPECT_TRUE(c.all());
  EXPECT_EQ(short_exact_pieces(s).size(), 3u);
}

TEST(DAr, CheckRejectsTruncation) {
  auto t = from_data("a3_rad2.json");
  std::size_t s1 = 3;
  auto s = d_ar_sequence(t, s1);
  auto cut = s;
  cut.terms.pop_back();
  cut.maps.pop_back();
  if (!cut.multiplicities.empty()) cut.multiplicities.pop_back();
  EXPECT_FALSE(check_d_ar_sequence(t, s1, cut).all());
}

TEST(DefectSymmetry, ShippedExamples) {
  for (const auto& name : higherk::testing::shipped_examples()) {
    auto t = from_data(name);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.projective[i]) continue;
      auto g = d_ar_sequence(t, i);
      for (const auto& s : t.summands) EXPECT_TRUE(defect_symmetry(t, g, s).holds()) << name;
    }
  }
}

TEST(Presentation, A2) {
  auto p = present_as_bound_quiver(EndAlgebra(a2_t()));
  EXPECT_TRUE(p.verified);
  EXPECT_EQ(p.algebra->vertex_count(), 3u);
  EXPECT_EQ(p.algebra->quiver().arrow_count(), 2u);
  EXPECT_EQ(p.algebra->relations().size(), 1u);
  EXPECT_EQ(p.algebra->dimension(), 5u);
}

TEST(Presentation, SemisimpleHasNoArrows) {
  auto a = linear_a(3);
  auto t = make_tilting_data(a, 1, {simple_module(a, 0), simple_module(a, 1), simple_module(a, 2)});
  auto p = present_as_bound_quiver(EndAlgebra(t));
  EXPECT_TRUE(p.verified);
  EXPECT_EQ(p.algebra->quiver().arrow_count(), 0u);
  EXPECT_EQ(p.algebra->dimension(), 3u);
}

TEST(Presentation, BlocksMatchEnd) {
  for (const auto& name : higherk::testing::shipped_examples()) {
    EndAlgebra e(from_data(name));
    auto p = present_as_bound_quiver(e);
    EXPECT_TRUE(p.verified) << name;
    for (std::size_t u = 0; u < e.size(); ++u)
      for (std::size_t w = 0; w < e.size(); ++w)
        EXPECT_EQ(p.algebra->basis_between(u, w).size(), e.block_dimension(u, w)) << name;
  }
}

TEST(Tower, A2TwoSteps) {
  auto step = tower_step(a2_t());
  EXPECT_TRUE(step.report.passed);
  EXPECT_EQ(step.next.d, 2u);
  EXPECT_EQ(step.presentation.algebra->vertex_count(), 3u);
  auto again = tower_step(step.next);
  EXPECT_TRUE(again.report.passed);
  EXPECT_EQ(again.next.d, 3u);
  EXPECT_EQ(again.presentation.algebra->vertex_count(), 4u);
  EXPECT_EQ(again.presentation.algebra->dimension(), 7u);
}
