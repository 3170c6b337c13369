#include <gtest/gtest.h>

#include <set>

#include "../support.hpp"
#include "higherk/homology.hpp"
#include "higherk/tilting.hpp"

using namespace higherk;
using higherk::testing::linear_a;

namespace {

std::set<std::vector<std::size_t>> dim_vectors(const std::vector<Representation>& ms) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& m : ms) out.insert(m.dims());
  return out;
}

TiltingData rad2_t() {
  auto a = linear_a(3, true);
  auto ind = enumerate_indecomposables(a);
  std::vector<Representation> t;
  for (const auto& m : ind)
    if (m.dims() != std::vector<std::size_t>{0, 1, 0}) t.push_back(m);
  return make_tilting_data(a, 2, t);
}

}  // namespace

TEST(Enumerate, A2) {
  auto ind = enumerate_indecomposables(linear_a(2));
  EXPECT_EQ(dim_vectors(ind), (std::set<std::vector<std::size_t>>{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(Enumerate, A3Intervals) {
  auto ind = enumerate_indecomposables(linear_a(3));
  ASSERT_EQ(ind.size(), 6u);
  EXPECT_EQ(dim_vectors(ind).size(), 6u);
}

TEST(Enumerate, A3RadSquareZero) {
  auto ind = enumerate_indecomposables(linear_a(3, true));
  EXPECT_EQ(dim_vectors(ind),
            (std::set<std::vector<std::size_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
}

TEST(Enumerate, BudgetExceeded) {
  try {
    enumerate_indecomposables(linear_a(4), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationBudgetExceeded);
  }
}

TEST(TiltingData, RejectsIsomorphicSummands) {
  auto a = linear_a(2);
  auto s = simple_module(a, 0);
  EXPECT_THROW(make_tilting_data(a, 1, {s, s}), Error);
  EXPECT_EQ(make_tilting_data(a, 1, {s}).labels, (std::vector<std::string>{"t0"}));
}

TEST(Verify, DOneAllIndecomposables) {
  auto a = linear_a(3);
  auto ind = enumerate_indecomposables(a);
  EXPECT_TRUE(verify_d_cluster_tilting(make_tilting_data(a, 1, ind), ind).passed);
}

TEST(Verify, A2ProjectivesAreNotTwoClusterTilting) {
  auto a = linear_a(2);
  auto ind = enumerate_indecomposables(a);
  auto t = make_tilting_data(a, 2, {indecomposable_projective(a, 0), indecomposable_projective(a, 1)});
  auto rep = verify_d_cluster_tilting(t, ind);
  EXPECT_FALSE(rep.passed);
  bool s1_flagged = false;
  for (const auto& v : rep.violations)
    s1_flagged = s1_flagged || (!v.in_t && ind[v.module].dims() == std::vector<std::size_t>{1, 0});
  EXPECT_TRUE(s1_flagged);
}

TEST(Verify, IncompleteList) {
  auto a = linear_a(2);
  auto t = make_tilting_data(a, 1, {indecomposable_projective(a, 0)});
  try {
    verify_d_cluster_tilting(t, {simple_module(a, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteList);
  }
}

// Oracle: brute force over all 2^5 subsets with ext_dim directly.
TEST(Search, MatchesBruteForce) {
  auto a = linear_a(3, true);
  auto ind = enumerate_indecomposables(a);
  const std::size_t n = ind.size();
  std::set<std::vector<std::size_t>> expected;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      bool left = true, right = true;
      for (auto i : s) {
        left = left && ext_dim(1, ind[i], ind[x]) == 0;
        right = right && ext_dim(1, ind[x], ind[i]) == 0;
      }
      bool member = mask >> x & 1;
      ok = left == member && right == member;
    }
    if (ok) expected.insert(s);
  }
  auto hits = search_d_cluster_tilting(ind, 2);
  EXPECT_EQ(std::set<std::vector<std::size_t>>(hits.begin(), hits.end()), expected);
  ASSERT_EQ(expected.size(), 1u);
  // the hit contains every projective and injective
  for (std::size_t v = 0; v < 3; ++v)
    for (const auto& m : {indecomposable_projective(a, v), indecomposable_injective(a, v)}) {
      bool found = false;
      for (auto i : *expected.begin()) found = found || is_isomorphic(ind[i], m);
      EXPECT_TRUE(found);
    }
}

TEST(Approximation, OfObjectInT) {
  auto t = rad2_t();
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto ap = right_t_approximation(t, t.summands[i]);
    EXPECT_TRUE(ap.map.is_isomorphism());
    std::vector<std::size_t> unit(t.size(), 0);
    unit[i] = 1;
    EXPECT_EQ(ap.source.multiplicities, unit);
  }
}

TEST(Approximation, OfNonMember) {
  auto t = rad2_t();
  auto s2 = simple_module(t.algebra, 1);
  auto ap = right_t_approximation(t, s2);
  EXPECT_TRUE(ap.map.is_surjective());
  EXPECT_TRUE(is_right_minimal(ap.map));
  for (const auto& ti : t.summands)
    EXPECT_EQ(image_rank_after(ap.map, hom_basis(ti, ap.source.module)), hom_dimension(ti, s2));
  EXPECT_THROW(right_t_approximation(t, Representation::zero(t.algebra)), Error);
}

TEST(LeftResolution, Examples) {
  auto t = rad2_t();
  for (const auto& ti : t.summands) EXPECT_EQ(left_t_resolution(t, ti).terms.size(), 1u);
  auto r = left_t_resolution(t, simple_module(t.algebra, 1));
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_TRUE(is_hom_exact(t, r));
  EXPECT_TRUE(is_minimal_t_resolution(r));
  EXPECT_TRUE(left_t_resolution(t, Representation::zero(t.algebra)).terms.empty());

  auto a = linear_a(3);
  auto ind = enumerate_indecomposables(a);
  auto all = make_tilting_data(a, 1, ind);
  for (const auto& m : ind) EXPECT_EQ(left_t_resolution(all, m).terms.size(), 1u);
}

TEST(LeftResolution, OverrunWhenNotClusterTilting) {
  auto a = linear_a(2);
  auto t = make_tilting_data(a, 1, {indecomposable_projective(a, 0), indecomposable_projective(a, 1)});
  try {
    left_t_resolution(t, simple_module(a, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionOverrun);
  }
}

TEST(LeftResolution, PruneOrderIndependent) {
  auto t = rad2_t();
  std::vector<Representation> parts = {simple_module(t.algebra, 1), simple_module(t.algebra, 1),
                                       indecomposable_projective(t.algebra, 0)};
  auto m = direct_sum(parts, t.algebra);
  auto r1 = left_t_resolution(t, m, PruneOrder::Standard);
  auto r2 = left_t_resolution(t, m, PruneOrder::Reversed);
  ASSERT_EQ(r1.terms.size(), r2.terms.size());
  for (std::size_t k = 0; k < r1.terms.size(); ++k) {
    EXPECT_EQ(r1.terms[k].multiplicities, r2.terms[k].multiplicities);
    EXPECT_TRUE(is_isomorphic(r1.terms[k].module, r2.terms[k].module));
  }
}
