#include "higherk/polynomial.hpp"

#include <stdexcept>

namespace higherk {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) {
  return Polynomial({-root, Rational(1)});
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Rational inv = 1 / leading();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

RationalMatrix Polynomial::evaluate(const RationalMatrix& m) const {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix r(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * m;
    for (std::size_t i = 0; i < n; ++i) r(i, i) += *it;
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  if (rem.size() <= db) return {Polynomial{}, a};
  std::vector<Rational> quo(rem.size() - db, Rational(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / b.leading();
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs_[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial power(const Polynomial& p, std::size_t e) {
  Polynomial r({Rational(1)});
  for (std::size_t i = 0; i < e; ++i) r = r * p;
  return r;
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier; divisions by k are exact over the rationals.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    RationalMatrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p0) {
  std::vector<Polynomial> out;
  if (p0.degree() <= 0) return out;
  Polynomial p = p0.monic();
  Polynomial dp = p.derivative();
  Polynomial a = gcd(p, dp);
  Polynomial b = divmod(p, a).first;
  Polynomial c = divmod(dp, a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial ai = gcd(b, d);
    Polynomial nb = divmod(b, ai).first;
    c = divmod(d, ai).first;
    b = nb;
    d = c - b.derivative();
    out.push_back(ai);
  }
  return out;
}

}  // namespace higherk
