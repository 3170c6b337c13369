#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "higherk/module.hpp"

namespace higherk {

/// A direct sum of indecomposable projectives P_{v_0} + P_{v_1} + ..., one
/// generator (the trivial path) per summand.
struct ProjectiveTerm {
  Representation module;
  std::vector<std::size_t> generators;  // vertex of each summand, in order

  /// multiplicity of P_v, indexed by v
  [[nodiscard]] std::vector<std::size_t> multiplicities() const;
};

ProjectiveTerm projective_term(const AlgebraPtr& a, std::vector<std::size_t> generators);

/// Row offset of summand `i` inside term.module at vertex `w`.
std::size_t summand_offset(const ProjectiveTerm& term, std::size_t i, std::size_t w);

/// The morphism between projective sums sending generator i of `source` to
/// sum_j images[i][j], where images[i][j] holds coordinates in
/// basis_between(target.generators[j], source.generators[i]).
ModuleMorphism projective_morphism(const ProjectiveTerm& source, const ProjectiveTerm& target,
                                   const std::vector<std::vector<RationalVector>>& images);

/// images[i][j] for a morphism between projective sums (inverse of
/// projective_morphism).
std::vector<std::vector<RationalVector>> generator_images(const ProjectiveTerm& source,
                                                          const ProjectiveTerm& target,
                                                          const ModuleMorphism& f);

/// Sum of the images of all arrows, vertexwise.
Subobject radical(const Representation& m);
/// dim of top(m) at each vertex.
std::vector<std::size_t> top_dimensions(const Representation& m);
/// Whether the image of f lies in the radical of its target.
bool lands_in_radical(const ModuleMorphism& f);
bool is_projective(const Representation& m);

struct ProjectiveCover {
  ProjectiveTerm term;
  ModuleMorphism map;  // term.module -> m
};

ProjectiveCover projective_cover(const Representation& m);

struct ProjectiveResolution {
  Representation target;
  std::vector<ProjectiveTerm> terms;          // P_0, P_1, ...
  std::vector<ModuleMorphism> differentials;  // differentials[k]: P_{k+1} -> P_k
  std::optional<ModuleMorphism> augmentation; // P_0 -> target
  bool complete = false;                      // true when the last syzygy is zero

  /// P_k, or the zero module once the resolution has stopped.
  [[nodiscard]] Representation term(std::size_t k) const;
};

ProjectiveResolution minimal_projective_resolution(const Representation& m, std::size_t length);

/// Exactness and minimality re-verified by vertexwise ranks.
bool is_exact_resolution(const ProjectiveResolution& r);
bool is_minimal_resolution(const ProjectiveResolution& r);

/// Caches resolutions by module content. Safe for concurrent use.
class ResolutionCache {
 public:
  ProjectiveResolution get(const Representation& m, std::size_t length);

 private:
  std::mutex mutex_;
  std::map<std::string, ProjectiveResolution> entries_;
};

/// Key identifying a module's content (algebra identity, dims and maps).
std::string module_key(const Representation& m);

std::size_t ext_dim(std::size_t i, const Representation& m, const Representation& n);
/// Uses a resolution of m that reaches at least P_{i+1} or is complete.
std::size_t ext_dim(std::size_t i, const ProjectiveResolution& res, const Representation& n);

/// Tr_d(m) = coker(P_{d-1}* -> P_d*), a module over the opposite algebra.
Representation transpose_d(const Representation& m, std::size_t d);
Representation transpose_d(const ProjectiveResolution& res, std::size_t d);

/// D Tr_d(m); zero on projectives.
Representation tau_d(const Representation& m, std::size_t d);
Representation tau_d(const ProjectiveResolution& res, std::size_t d);

/// Tr D, the classical inverse translate.
Representation tau_inverse(const Representation& m);

}  // namespace higherk
