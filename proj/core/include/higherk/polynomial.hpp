#pragma once

#include <utility>
#include <vector>

#include "higherk/matrix.hpp"

namespace higherk {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// t - root
  static Polynomial linear(const Rational& root);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }
  [[nodiscard]] Rational coefficient(std::size_t k) const;

  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;
  /// p(m) for a square matrix m, by Horner's rule.
  [[nodiscard]] RationalMatrix evaluate(const RationalMatrix& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Quotient and remainder of a / b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial power(const Polynomial& p, std::size_t e);

/// Monic characteristic polynomial det(tI - m).
Polynomial characteristic_polynomial(const RationalMatrix& m);

/// Yun's squarefree decomposition of a monic polynomial: factors f_1, f_2, ...
/// with p = prod f_i^i, pairwise coprime and squarefree. Constant factors are
/// returned as the unit polynomial.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

}  // namespace higherk
