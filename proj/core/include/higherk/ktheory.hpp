#pragma once

#include <optional>
#include <vector>

#include "higherk/linalg.hpp"
#include "higherk/tilting.hpp"

namespace higherk {

struct ShortExactSequence {
  Representation a, b, c;
  ModuleMorphism inject;   // a -> b
  ModuleMorphism surject;  // b -> c
};

/// Throws NotExact unless inject is injective, surject surjective and
/// im(inject) = ker(surject) at every vertex.
ShortExactSequence make_ses(ModuleMorphism inject, ModuleMorphism surject);

/// 0 -> A_{d+1} -> ... -> A_1 -> A_0 -> 0, with terms[k] = A_k and
/// maps[k]: A_{k+1} -> A_k.
struct DExactSequence {
  std::vector<Representation> terms;
  std::vector<ModuleMorphism> maps;
  /// Multiplicities of T's summands in each term, when known.
  std::vector<std::vector<std::size_t>> multiplicities;
};

bool is_exact_sequence(const DExactSequence& s);

/// The short exact pieces 0 -> K_{k+1} -> A_{k+1} -> K_k -> 0, K_0 = A_0.
std::vector<ShortExactSequence> short_exact_pieces(const DExactSequence& s);

/// Sum_k (-1)^k multiplicities[k].
IntegerVector alternating_class(const DExactSequence& s);

/// G[i][j] = dim Hom(t_i, t_j).
IntegerMatrix gram_matrix(const TiltingData& t);
IntegerVector kappa(const IntegerMatrix& g, std::span<const Integer> v);
/// Throws NotUnimodular when det G != +-1.
IntegerVector kappa_inverse(const IntegerMatrix& g, std::span<const Integer> v);

/// Alternating sum of the multiplicity vectors of the left T-resolution.
IntegerVector index(const TiltingData& t, const Representation& c);
IntegerVector index(const AugmentedTResolution& r, std::size_t summand_count);

/// Coordinate i: dim coker(Hom(t_i, b) -> Hom(t_i, c)).
IntegerVector contravariant_defect_vector(const TiltingData& t, const ShortExactSequence& s);

/// dim coker(Hom(s, A_1) -> Hom(s, A_0)).
std::size_t contravariant_defect_dim(const DExactSequence& g, const Representation& s);
/// dim coker(Hom(A_d, x) -> Hom(A_{d+1}, x)).
std::size_t covariant_defect_dim(const DExactSequence& g, const Representation& x);

struct ErrorTermCheck {
  bool holds = false;
  IntegerVector error;  // Ind a - Ind b + Ind c
  IntegerVector lhs;    // G * error
  IntegerVector rhs;    // defect vector
};

ErrorTermCheck verify_error_term(const TiltingData& t, const IntegerMatrix& g, const ShortExactSequence& s);

/// One column per non-projective summand: the alternating class of its
/// d-Auslander-Reiten sequence.
IntegerMatrix relation_lattice(const TiltingData& t);
IntegerMatrix relation_matrix(std::size_t summand_count, const std::vector<DExactSequence>& sequences);

struct K0Presentation {
  IntegerMatrix relations;
  SmithDecomposition smith;
  std::size_t quotient_rank = 0;
  IntegerVector invariant_factors;
  IntegerMatrix quotient;  // free quotient coordinates (rows of U)
  IntegerMatrix lift;      // a section of `quotient` (columns of U^-1)

  [[nodiscard]] bool torsion_free() const;
  [[nodiscard]] bool contains(std::span<const Integer> v) const { return lattice_membership(smith, v); }
};

K0Presentation k0_presentation(const IntegerMatrix& relations);

/// Columns: composition vectors of the summands.
IntegerMatrix map_g(const TiltingData& t);

struct K0Maps {
  IntegerMatrix g;           // simples x summands
  IntegerMatrix f;           // quotient coordinates x simples
  IntegerMatrix g_quotient;  // simples x quotient coordinates
  bool relations_in_kernel = false;
  bool mutually_inverse = false;
};

K0Maps k0_maps(const TiltingData& t, const K0Presentation& p);

IntegerVector to_integer_vector(const std::vector<std::size_t>& v);
IntegerVector to_integer_vector(const std::vector<long>& v);

}  // namespace higherk
