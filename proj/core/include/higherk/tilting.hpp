#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "higherk/homology.hpp"
#include "higherk/module.hpp"

namespace higherk {

struct TiltingData {
  AlgebraPtr algebra;
  std::size_t d = 1;
  std::vector<Representation> summands;
  std::vector<std::string> labels;
  std::vector<bool> projective;

  [[nodiscard]] std::size_t size() const { return summands.size(); }
  /// Index of the summand isomorphic to m, if any.
  [[nodiscard]] std::optional<std::size_t> find(const Representation& m) const;
};

/// Fills in projectivity flags and default labels t0, t1, ...; throws
/// InvalidInput if two summands are isomorphic or one is not certified
/// indecomposable.
TiltingData make_tilting_data(const AlgebraPtr& a, std::size_t d, std::vector<Representation> summands,
                              std::vector<std::string> labels = {});

/// All indecomposables up to isomorphism of a representation-directed
/// algebra, found by closing projectives and injectives under tau and tau^-.
std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& a, std::size_t max_count = 200);

// -- Definition check ----------------------------------------------------------

struct ClusterViolation {
  std::size_t module = 0;  // index into the indecomposables list
  bool in_t = false;
  /// For members of T: the summand and degree of a nonzero Ext. For
  /// non-members: the side on which the module is Ext-orthogonal to T.
  std::optional<std::size_t> summand;
  std::size_t degree = 0;
  bool left = false;  // Ext(T, x) side when true, Ext(x, T) side otherwise
};

struct ClusterReport {
  bool passed = false;
  std::vector<std::size_t> membership;  // summand index per indecomposable, or npos
  std::vector<ClusterViolation> violations;
  static constexpr const char* functorial_finiteness =
      "automatic: add of a single module over a finite-dimensional algebra is functorially finite";
};

ClusterReport verify_d_cluster_tilting(const TiltingData& t, const std::vector<Representation>& indecs);

/// Every subset S (as sorted index lists) of the indecomposables with
/// S = {x : Ext^{1..d-1}(S, x) = 0} = {x : Ext^{1..d-1}(x, S) = 0}.
std::vector<std::vector<std::size_t>> search_d_cluster_tilting(const std::vector<Representation>& indecs,
                                                               std::size_t d);

// -- Approximations and resolutions -----------------------------------------

enum class PruneOrder { Standard, Reversed };

struct TObject {
  Representation module;
  std::vector<std::size_t> multiplicities;  // per summand of T
  std::vector<std::size_t> summands;        // summand index of each block, in order
};

struct Approximation {
  TObject source;
  ModuleMorphism map;  // source.module -> c
};

Approximation right_t_approximation(const TiltingData& t, const Representation& c,
                                    PruneOrder order = PruneOrder::Standard);

struct AugmentedTResolution {
  Representation target;
  std::vector<TObject> terms;          // t_0, t_1, ...
  std::vector<ModuleMorphism> maps;    // maps[0]: t_0 -> target, maps[k]: t_k -> t_{k-1}
};

/// Throws ResolutionOverrun if more than d terms are needed.
AugmentedTResolution left_t_resolution(const TiltingData& t, const Representation& c,
                                       PruneOrder order = PruneOrder::Standard);

/// Exactness of Hom(t', -) applied to the augmented resolution, for every
/// summand t'.
bool is_hom_exact(const TiltingData& t, const AugmentedTResolution& r);

/// f is right minimal: every endomorphism e of the source with f e = f is
/// invertible, i.e. {e : f e = 0} lies in rad End(source).
bool is_right_minimal(const ModuleMorphism& f);
bool is_minimal_t_resolution(const AugmentedTResolution& r);

}  // namespace higherk
