#pragma once

#include <string>
#include <vector>

#include "higherk/ktheory.hpp"
#include "higherk/tilting.hpp"

namespace higherk {

/// End(T) with e_u E e_w = Hom(t_w, t_u) and product p * q = p o q.
class EndAlgebra {
 public:
  explicit EndAlgebra(TiltingData t);

  [[nodiscard]] const TiltingData& tilting() const { return t_; }
  [[nodiscard]] std::size_t size() const { return t_.size(); }
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] std::size_t block_dimension(std::size_t u, std::size_t w) const { return blocks_[u][w].size(); }
  /// Basis of e_u E e_w = Hom(t_w, t_u).
  [[nodiscard]] const std::vector<ModuleMorphism>& block(std::size_t u, std::size_t w) const { return blocks_[u][w]; }

  [[nodiscard]] RationalVector coordinates(std::size_t u, std::size_t w, const ModuleMorphism& f) const;
  [[nodiscard]] ModuleMorphism element(std::size_t u, std::size_t w, std::span<const Rational> coords) const;
  /// a in e_u E e_w, b in e_w E e_x; result in e_u E e_x.
  [[nodiscard]] RationalVector multiply(std::size_t u, std::size_t w, std::size_t x, std::span<const Rational> a,
                                        std::span<const Rational> b) const;
  [[nodiscard]] RationalVector identity(std::size_t u) const;

  /// Basis of the radical in block (u, w), as coordinate columns.
  [[nodiscard]] const RationalMatrix& radical_block(std::size_t u, std::size_t w) const { return radical_[u][w]; }

  [[nodiscard]] bool is_associative() const;
  [[nodiscard]] bool has_orthogonal_idempotents() const;

 private:
  TiltingData t_;
  std::vector<std::vector<std::vector<ModuleMorphism>>> blocks_;
  std::vector<std::vector<RationalMatrix>> flat_;  // flattened basis as columns
  // products_[u][w][x][a * bw + b] = coordinates of block(u,w)[a] o block(w,x)[b]
  std::vector<std::vector<std::vector<std::vector<RationalVector>>>> products_;
  std::vector<std::vector<RationalMatrix>> radical_;
};

EndAlgebra build_end_algebra(const TiltingData& t);

/// The d-Auslander-Reiten sequence 0 -> t_{d+1} -> ... -> t_1 -> t -> 0
/// ending at summand `index`; throws ProjectiveInput for projective t.
DExactSequence d_ar_sequence(const TiltingData& t, std::size_t index);

struct DArCheck {
  bool exact = false;
  bool length = false;            // d + 2 terms
  bool end_is_tau = false;        // t_{d+1} ~ tau_d t
  bool composition_sum_zero = false;
  bool hom_complexes = false;     // Hom(t', -) exact except a 1-dim cokernel at t' = t
  bool minimal = false;
  [[nodiscard]] bool all() const {
    return exact && length && end_is_tau && composition_sum_zero && hom_complexes && minimal;
  }
};

DArCheck check_d_ar_sequence(const TiltingData& t, std::size_t index, const DExactSequence& s);

struct DefectSymmetry {
  std::size_t contravariant = 0;  // dim gamma^*(s)
  std::size_t covariant = 0;      // dim gamma_*(tau_d s)
  [[nodiscard]] bool holds() const { return contravariant == covariant; }
};

DefectSymmetry defect_symmetry(const TiltingData& t, const DExactSequence& gamma, const Representation& s);

struct BoundQuiverPresentation {
  AlgebraPtr algebra;
  /// For each arrow, its image in E as block coordinates.
  std::vector<RationalVector> arrow_images;
  bool verified = false;
};

/// Throws NotBasic if some End(t_i)/rad is not one-dimensional.
BoundQuiverPresentation present_as_bound_quiver(const EndAlgebra& e);

struct TowerStep {
  BoundQuiverPresentation presentation;
  TiltingData next;
  std::vector<Representation> indecomposables;
  ClusterReport report;
  std::string method;  // how the next summands were found
};

/// End(T) as the next algebra, with a (d+1)-cluster tilting candidate made of
/// its projectives and the tau_{d+1}-orbits of its injectives, falling back to
/// exhaustive search.
TowerStep tower_step(const TiltingData& t, std::size_t max_indecs = 200);

}  // namespace higherk
