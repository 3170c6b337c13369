#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "higherk/matrix.hpp"

namespace higherk {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Arrows are given as (name, source label, target label).
  Quiver(std::vector<std::string> vertices,
         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  [[nodiscard]] std::size_t vertex_index(const std::string& label) const;
  [[nodiscard]] std::size_t arrow_index(const std::string& name) const;

  /// Same vertices, every arrow reversed (names kept).
  [[nodiscard]] Quiver opposite() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_lookup_;
  std::map<std::string, std::size_t> arrow_lookup_;
};

/// A path read left to right: [a, b] means "a then b". Trivial paths carry
/// no arrows and source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  [[nodiscard]] std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

Path trivial_path(std::size_t vertex);
/// Concatenation p then q; throws when the endpoints do not meet.
Path concatenate(const Path& p, const Path& q);
Path reversed(const Path& p);
std::string path_to_string(const Quiver& q, const Path& p);

struct PathTerm {
  Rational coefficient;
  Path path;

  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

/// Linear combination of parallel paths.
struct PathExpression {
  std::vector<PathTerm> terms;

  friend bool operator==(const PathExpression&, const PathExpression&) = default;
};

/// Builds a path from arrow names, validating composability.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names);

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// KQ/I for an admissible ideal I generated by the given relations. The path
/// basis is fixed at construction: for each pair of vertices, paths are kept
/// shortest-first and longer paths are rewritten in terms of shorter ones.
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
 public:
  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] const std::vector<PathExpression>& relations() const { return relations_; }
  [[nodiscard]] std::size_t nilpotency_bound() const { return nilpotency_bound_; }
  [[nodiscard]] std::size_t vertex_count() const { return quiver_.vertex_count(); }

  /// All basis paths, grouped by (source, target).
  [[nodiscard]] const std::vector<Path>& path_basis() const { return basis_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }

  /// Basis paths from `source` to `target`, in block order.
  [[nodiscard]] const std::vector<Path>& basis_between(std::size_t source, std::size_t target) const;
  [[nodiscard]] std::size_t dimension_between(std::size_t source, std::size_t target) const {
    return basis_between(source, target).size();
  }

  /// Coordinates of the residue of `p` in basis_between(p.source, p.target).
  [[nodiscard]] RationalVector reduce(const Path& p) const;

  /// Reduced product of two elements given in block coordinates:
  /// x in e_s A e_m, y in e_m A e_t, result in e_s A e_t.
  [[nodiscard]] RationalVector multiply(std::size_t s, std::size_t m, std::size_t t,
                                        std::span<const Rational> x,
                                        std::span<const Rational> y) const;

  /// The opposite algebra; opposite()->opposite() is this algebra.
  [[nodiscard]] AlgebraPtr opposite() const;

  /// Structural equality: same quiver, relations and bound.
  [[nodiscard]] bool same_as(const BoundQuiverAlgebra& other) const;

  friend AlgebraPtr build_algebra(const Quiver& q, std::vector<PathExpression> relations,
                                  std::size_t nilpotency_bound);

 private:
  BoundQuiverAlgebra() = default;

  Quiver quiver_;
  std::vector<PathExpression> relations_;
  std::size_t nilpotency_bound_ = 1;
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<Path>>> blocks_;
  std::map<Path, RationalVector> normal_forms_;

  mutable std::mutex opposite_mutex_;
  mutable AlgebraPtr opposite_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> origin_;
};

/// Throws Error(MalformedRelation) or Error(NotAdmissible).
AlgebraPtr build_algebra(const Quiver& q, std::vector<PathExpression> relations,
                         std::size_t nilpotency_bound);

/// Default bound used when none is given: number of arrows + 2.
std::size_t default_nilpotency_bound(const Quiver& q);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace higherk
