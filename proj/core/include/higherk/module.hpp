#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "higherk/matrix.hpp"
#include "higherk/quiver.hpp"

namespace higherk {

/// A finitely generated right module as a representation of the quiver: one
/// vector space per vertex and, for every arrow a: s -> t, a matrix of shape
/// dim(t) x dim(s). Values are immutable and cheap to copy.
class Representation {
 public:
  /// Validates shapes and that every relation acts as zero.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                 std::vector<RationalMatrix> arrow_maps);

  static Representation zero(AlgebraPtr algebra);

  [[nodiscard]] const AlgebraPtr& algebra() const { return data_->algebra; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return data_->dims; }
  [[nodiscard]] std::size_t dim(std::size_t vertex) const { return data_->dims.at(vertex); }
  [[nodiscard]] std::size_t total_dimension() const;
  [[nodiscard]] bool is_zero() const { return total_dimension() == 0; }
  [[nodiscard]] const std::vector<RationalMatrix>& arrow_maps() const { return data_->maps; }
  [[nodiscard]] const RationalMatrix& arrow_map(std::size_t arrow) const { return data_->maps.at(arrow); }

  /// Matrix by which the path acts, dim(target) x dim(source).
  [[nodiscard]] RationalMatrix path_map(const Path& p) const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> maps;
  };
  struct Unchecked {};
  Representation(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims,
                 std::vector<RationalMatrix> arrow_maps);
  friend Representation trusted_representation(AlgebraPtr, std::vector<std::size_t>,
                                               std::vector<RationalMatrix>);

  std::shared_ptr<const Data> data_;
};

/// Vertex maps f_v: source_v -> target_v (matrices target_v x source_v)
/// intertwining the arrow actions.
class ModuleMorphism {
 public:
  /// Validates shapes and the intertwining condition.
  ModuleMorphism(Representation source, Representation target, std::vector<RationalMatrix> vertex_maps);

  static ModuleMorphism zero(const Representation& source, const Representation& target);
  static ModuleMorphism identity(const Representation& m);

  [[nodiscard]] const Representation& source() const { return source_; }
  [[nodiscard]] const Representation& target() const { return target_; }
  [[nodiscard]] const std::vector<RationalMatrix>& vertex_maps() const { return maps_; }
  [[nodiscard]] const RationalMatrix& vertex_map(std::size_t v) const { return maps_.at(v); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;
  [[nodiscard]] bool is_isomorphism() const { return is_injective() && is_surjective(); }

  /// All vertex maps laid out row-major, one after the other.
  [[nodiscard]] RationalVector flatten() const;

  friend ModuleMorphism operator+(const ModuleMorphism& f, const ModuleMorphism& g);
  friend ModuleMorphism operator*(const Rational& c, const ModuleMorphism& f);

 private:
  struct Trusted {};
  ModuleMorphism(Trusted, Representation source, Representation target, std::vector<RationalMatrix> maps);
  friend ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
  friend ModuleMorphism trusted_morphism(Representation, Representation, std::vector<RationalMatrix>);

  Representation source_;
  Representation target_;
  std::vector<RationalMatrix> maps_;
};

/// Skips relation checks; for constructions that preserve them by design
/// (submodules, quotients, sums).
Representation trusted_representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                                      std::vector<RationalMatrix> arrow_maps);

/// g after f.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

/// Skips the intertwining check; for internal constructions that have
/// already established it.
ModuleMorphism trusted_morphism(Representation source, Representation target,
                                std::vector<RationalMatrix> vertex_maps);

/// Linear combination sum c_i f_i of morphisms with a common source/target.
ModuleMorphism linear_combination(std::span<const ModuleMorphism> fs, std::span<const Rational> coeffs);

// -- Hom spaces --------------------------------------------------------------

std::vector<ModuleMorphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dimension(const Representation& m, const Representation& n);

/// Dimension of the span of { post o f : f in fs } (post applied after).
std::size_t image_rank_after(const ModuleMorphism& post, std::span<const ModuleMorphism> fs);
/// Dimension of the span of { f o pre : f in fs }.
std::size_t image_rank_before(std::span<const ModuleMorphism> fs, const ModuleMorphism& pre);
/// Dimension of the span of the flattened morphisms.
std::size_t span_dimension(std::span<const ModuleMorphism> fs);

// -- Kernels, cokernels, images ----------------------------------------------

struct Subobject {
  Representation object;
  ModuleMorphism inclusion;
};

struct Quotient {
  Representation object;
  ModuleMorphism projection;
};

struct Image {
  Representation object;
  ModuleMorphism inclusion;   // image -> target
  ModuleMorphism surjection;  // source -> image
};

Subobject kernel(const ModuleMorphism& f);
Quotient cokernel(const ModuleMorphism& f);
Image image(const ModuleMorphism& f);

/// The submodule spanned at each vertex by the columns of `bases[v]`; throws
/// InvalidRepresentation if the subspaces are not closed under the arrows.
Subobject submodule(const Representation& m, const std::vector<RationalMatrix>& bases);

/// The g with mono o g = f; throws InvalidRepresentation when f does not
/// factor through the monomorphism.
ModuleMorphism factor_through_mono(const ModuleMorphism& f, const ModuleMorphism& mono);

// -- Direct sums -------------------------------------------------------------

struct DirectSum {
  Representation object;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};

DirectSum direct_sum_with_maps(std::span<const Representation> parts, const AlgebraPtr& algebra);
Representation direct_sum(std::span<const Representation> parts);
Representation direct_sum(std::span<const Representation> parts, const AlgebraPtr& algebra);

/// The morphism from the direct sum of the sources, f_i on the i-th summand.
ModuleMorphism row_morphism(const DirectSum& source, std::span<const ModuleMorphism> fs,
                            const Representation& target);
/// The morphism into the direct sum of the targets.
ModuleMorphism column_morphism(const Representation& source, std::span<const ModuleMorphism> fs,
                               const DirectSum& target);

// -- Invariants and isomorphism ----------------------------------------------

/// Per-vertex dimensions, i.e. composition multiplicities of the simples.
std::vector<long> composition_vector(const Representation& m);

/// Transport of structure along invertible vertex matrices g_v:
/// returns g_t M_a g_s^-1 together with the isomorphism g.
std::pair<Representation, ModuleMorphism> change_basis(const Representation& m,
                                                       const std::vector<RationalMatrix>& g);

/// Some isomorphism m -> n, found by random combinations inside Hom(m, n)
/// and certified by exact determinants.
std::optional<ModuleMorphism> find_isomorphism(const Representation& m, const Representation& n,
                                               std::uint64_t seed = 0x5eed);
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0x5eed);

/// A basis of the Jacobson radical of End(m), via the trace form.
std::vector<ModuleMorphism> endomorphism_radical(const Representation& m,
                                                 std::span<const ModuleMorphism> end_basis);
/// dim End(m) / rad End(m).
std::size_t endomorphism_top_dimension(const Representation& m);

// -- Decomposition -----------------------------------------------------------

struct Summand {
  Representation module;
  std::size_t multiplicity = 1;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Isomorphism from the direct sum (summand-major, each repeated by its
  /// multiplicity) to the decomposed module.
  ModuleMorphism witness;
  std::uint64_t seed = 0;
};

/// Splits into certified absolutely indecomposable summands; throws
/// NotAbsolutelyIndecomposable when a piece has End/rad of dimension > 1
/// but no splitting endomorphism is found.
Decomposition decompose(const Representation& m, std::uint64_t seed = 0x5eed);

/// Whether End(m)/rad is one-dimensional.
bool is_certified_indecomposable(const Representation& m);

// -- Standard modules --------------------------------------------------------

Representation simple_module(const AlgebraPtr& a, std::size_t vertex);
/// Basis at w: basis paths from `vertex` to w; arrows act by extension.
Representation indecomposable_projective(const AlgebraPtr& a, std::size_t vertex);
Representation indecomposable_injective(const AlgebraPtr& a, std::size_t vertex);

/// Vector-space dual, a representation over the opposite algebra.
Representation dual(const Representation& m);
/// Dual of a morphism f: m -> n, i.e. D(n) -> D(m).
ModuleMorphism dual(const ModuleMorphism& f);

}  // namespace higherk
