#pragma once

#include <optional>
#include <span>
#include <vector>

#include "higherk/matrix.hpp"

namespace higherk {

/// Reduced row echelon form together with the pivot column of each nonzero
/// row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of the right null space of `m`.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Rows form a basis of {y : y m = 0}.
RationalMatrix left_kernel_basis(const RationalMatrix& m);

/// A maximal linearly independent subset of the columns of `m`, in order.
RationalMatrix column_space_basis(const RationalMatrix& m);

/// Indices of the columns selected by column_space_basis.
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, std::span<const Rational> b);

/// Some X with a X = b (column by column).
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

Rational determinant(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

/// U * source * V == diagonal, with U and V unimodular and the diagonal
/// entries nonnegative, each dividing the next.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix diagonal;
  IntegerMatrix v;
  IntegerMatrix source;

  [[nodiscard]] std::size_t rank() const;
  /// The nonzero diagonal entries.
  [[nodiscard]] IntegerVector invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Whether v lies in the integer span of the columns of b.
bool lattice_membership(const IntegerMatrix& b, std::span<const Integer> v);
bool lattice_membership(const SmithDecomposition& snf, std::span<const Integer> v);

}  // namespace higherk
