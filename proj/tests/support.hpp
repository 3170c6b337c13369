#pragma once

#include <string>
#include <vector>

#include "higherk/errors.hpp"
#include "higherk/io.hpp"
#include "higherk/linalg.hpp"
#include "higherk/module.hpp"
#include "higherk/quiver.hpp"
#include "higherk/random.hpp"
#include "higherk/tilting.hpp"

#ifndef HIGHERK_TEST_DATA_DIR
#define HIGHERK_TEST_DATA_DIR "data"
#endif

namespace higherk::testing {

inline std::string data_path(const std::string& name) { return std::string(HIGHERK_TEST_DATA_DIR) + "/" + name; }

inline const std::vector<std::string>& shipped_examples() {
  static const std::vector<std::string> files = {"a2.json", "a3.json", "a3_rad2.json", "a4_rad2.json"};
  return files;
}

// Linear A_n, 1 -> 2 -> ... -> n, optionally with all length-2 paths killed.
inline AlgebraPtr linear_a(std::size_t n, bool rad_square_zero = false) {
  std::vector<std::string> v;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    arrows.emplace_back("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  Quiver q(v, arrows);
  std::vector<PathExpression> rels;
  if (rad_square_zero)
    for (std::size_t i = 1; i + 1 < n; ++i)
      rels.push_back({{PathTerm{1, make_path(q, {"a" + std::to_string(i), "a" + std::to_string(i + 1)})}}});
  return build_algebra(q, rels, rad_square_zero ? 2 : n);
}

inline Representation rep(const AlgebraPtr& a, std::vector<std::size_t> dims, std::vector<RationalMatrix> maps) {
  return Representation(a, std::move(dims), std::move(maps));
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range = 3) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-range, range);
  return m;
}

inline IntegerMatrix random_integer_matrix(Rng& rng, std::size_t r, std::size_t c, long range = 6) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-range, range);
  return m;
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, n, n);
    if (determinant(m) != 0) return m;
  }
}

/// A random base change of m.
inline Representation scramble(Rng& rng, const Representation& m) {
  std::vector<RationalMatrix> g;
  for (auto d : m.dims()) g.push_back(random_invertible(rng, d));
  return change_basis(m, g).first;
}

/// A scrambled sum of one to `max_parts` random members of `pool`.
inline Representation random_module(Rng& rng, const AlgebraPtr& a, const std::vector<Representation>& pool,
                                    std::size_t max_parts = 3) {
  std::vector<Representation> parts;
  const long n = rng.uniform(1, static_cast<long>(max_parts));
  for (long i = 0; i < n; ++i)
    parts.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))]);
  return scramble(rng, direct_sum(parts, a));
}

}  // namespace higherk::testing
