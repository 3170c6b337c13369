#include <gtest/gtest.h>

#include "../support.hpp"
#include "higherk/higher_ar.hpp"
#include "higherk/homology.hpp"
#include "higherk/ktheory.hpp"
#include "higherk/suite.hpp"

using namespace higherk;
using higherk::testing::linear_a;

namespace {

// T = {S1, S2, P1} over A2, d = 1.
TiltingData a2_t() {
  auto a = linear_a(2);
  return make_tilting_data(a, 1, {simple_module(a, 0), simple_module(a, 1), indecomposable_projective(a, 0)},
                           {"S1", "S2", "P1"});
}

ShortExactSequence a2_ar(const TiltingData& t) {
  auto inc = hom_basis(t.summands[1], t.summands[2]).at(0);
  auto proj = hom_basis(t.summands[2], t.summands[0]).at(0);
  return make_ses(inc, proj);
}

TiltingData rad2_t() {
  auto f = load_algebra_file(higherk::testing::data_path("a3_rad2.json"));
  return tilting_from_file(f);
}

}  // namespace

TEST(Ses, RejectsNonExact) {
  auto t = a2_t();
  auto zero = ModuleMorphism::zero(t.summands[1], t.summands[2]);
  auto proj = hom_basis(t.summands[2], t.summands[0]).at(0);
  try {
    make_ses(zero, proj);
    FAIL() << "accepted a zero first map";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotExact);
  }
  // injective and surjective but the composite is not zero
  auto s1 = t.summands[0];
  std::vector<Representation> parts = {s1, s1};
  auto sum = direct_sum_with_maps(parts, t.algebra);
  EXPECT_THROW(make_ses(sum.injections[0], sum.projections[0]), Error);
}

TEST(Gram, A2ByHand) {
  auto g = gram_matrix(a2_t());
  EXPECT_EQ(g, (IntegerMatrix{{1, 0, 0}, {0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(determinant(g), 1);
}

TEST(Kappa, InverseRoundTrip) {
  auto g = gram_matrix(rad2_t());
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    IntegerVector v(g.rows());
    for (auto& x : v) x = rng.uniform(-9, 9);
    EXPECT_EQ(kappa(g, kappa_inverse(g, v)), v);
  }
  IntegerVector unit = {0, 1, 0, 0};
  EXPECT_EQ(kappa(g, unit), g.column(1));
  IntegerVector one = {1};
  EXPECT_THROW(kappa_inverse(IntegerMatrix{{2}}, one), Error);
}

TEST(Index, SummandsAndZero) {
  auto t = rad2_t();
  for (std::size_t i = 0; i < t.size(); ++i) {
    IntegerVector unit(t.size(), Integer(0));
    unit[i] = 1;
    EXPECT_EQ(index(t, t.summands[i]), unit);
  }
  EXPECT_EQ(index(t, Representation::zero(t.algebra)), IntegerVector(t.size(), Integer(0)));
}

TEST(Index, Additive) {
  auto t = rad2_t();
  auto x = simple_module(t.algebra, 1), y = indecomposable_projective(t.algebra, 0);
  std::vector<Representation> parts = {x, y, x};
  auto sum = index(t, direct_sum(parts, t.algebra));
  auto ix = index(t, x), iy = index(t, y);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(sum[i], 2 * ix[i] + iy[i]);
}

TEST(Defect, A2ArSequence) {
  auto t = a2_t();
  auto s = a2_ar(t);
  EXPECT_EQ(contravariant_defect_vector(t, s), (IntegerVector{1, 0, 0}));
  auto e = verify_error_term(t, gram_matrix(t), s);
  EXPECT_TRUE(e.holds);
  EXPECT_EQ(e.lhs, (IntegerVector{1, 0, 0}));
}

TEST(Defect, SplitSequenceIsZero) {
  auto t = rad2_t();
  std::vector<Representation> parts = {t.summands[0], t.summands[2]};
  auto sum = direct_sum_with_maps(parts, t.algebra);
  auto s = make_ses(sum.injections[0], sum.projections[1]);
  auto e = verify_error_term(t, gram_matrix(t), s);
  EXPECT_TRUE(e.holds);
  EXPECT_EQ(e.rhs, IntegerVector(t.size(), Integer(0)));
  EXPECT_EQ(e.lhs, IntegerVector(t.size(), Integer(0)));
}

TEST(Defect, VanishesAtProjectives) {
  auto t = rad2_t();
  auto ind = enumerate_indecomposables(t.algebra);
  for (const auto& s : random_ses(t.algebra, ind, 17, 40)) {
    auto v = contravariant_defect_vector(t, s);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t.projective[i]) EXPECT_EQ(v[i], 0);
  }
}

TEST(Defect, CovariantAtS2) {
  auto t = a2_t();
  auto g = d_ar_sequence(t, 0);
  EXPECT_EQ(covariant_defect_dim(g, t.summands[1]), 1u);
  // P1 is projective-injective: direct cokernel computation
  const auto& last = g.terms.back();
  auto hd = hom_basis(g.terms[g.terms.size() - 2], t.summands[2]);
  EXPECT_EQ(covariant_defect_dim(g, t.summands[2]),
            hom_dimension(last, t.summands[2]) - image_rank_before(hd, g.maps.back()));
  EXPECT_EQ(covariant_defect_dim(g, t.summands[2]), 0u);
}

TEST(Relations, A2Column) {
  auto t = a2_t();
  auto r = relation_lattice(t);
  ASSERT_EQ(r.cols(), 1u);
  // [S1] - [P1] + [S2]
  EXPECT_EQ(r.column(0), (IntegerVector{1, 1, -1}));
  EXPECT_TRUE((map_g(t) * r).is_zero());
}

TEST(Relations, ColumnCountIsNonProjectiveCount) {
  auto t = rad2_t();
  std::size_t np = 0;
  for (bool p : t.projective) np += !p;
  EXPECT_EQ(relation_lattice(t).cols(), np);
}

TEST(K0, PresentationRanks) {
  struct Case {
    TiltingData t;
    std::size_t rank;
  };
  auto a3 = linear_a(3);
  std::vector<Case> cases = {{a2_t(), 2}, {rad2_t(), 3}, {make_tilting_data(a3, 1, enumerate_indecomposables(a3)), 3}};
  for (const auto& c : cases) {
    auto p = k0_presentation(relation_lattice(c.t));
    EXPECT_EQ(p.quotient_rank, c.rank);
    EXPECT_TRUE(p.torsion_free());
    auto m = k0_maps(c.t, p);
    EXPECT_TRUE(m.relations_in_kernel);
    EXPECT_TRUE(m.mutually_inverse);
    // g(f([S_v])) = [S_v]
    EXPECT_EQ(m.g_quotient * m.f, IntegerMatrix::identity(c.t.algebra->vertex_count()));
  }
}

TEST(K0, EmptyRelations) {
  auto p = k0_presentation(IntegerMatrix(3, 0));
  EXPECT_EQ(p.quotient_rank, 3u);
  EXPECT_TRUE(p.torsion_free());
  EXPECT_EQ(p.quotient, IntegerMatrix::identity(3));
}

TEST(K0, IndexOfSummandMapsBack) {
  auto t = rad2_t();
  auto p = k0_presentation(relation_lattice(t));
  auto m = k0_maps(t, p);
  // f(g([t])) agrees with [t] in the quotient
  for (std::size_t i = 0; i < t.size(); ++i) {
    IntegerVector unit(t.size(), Integer(0));
    unit[i] = 1;
    auto lhs = m.f * std::span<const Integer>(m.g.column(i));
    auto rhs = p.quotient * std::span<const Integer>(unit);
    EXPECT_EQ(lhs, rhs);
  }
}
