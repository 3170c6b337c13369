#include "higherk/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace higherk {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Rational elimination

RowEchelon row_echelon(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return row_echelon(m).pivots.size();
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return RationalMatrix::identity(n);
  auto ech = row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  RationalMatrix k(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      k(ech.pivots[r], f) = -ech.reduced(r, free[f]);
  }
  return k;
}

RationalMatrix left_kernel_basis(const RationalMatrix& m) {
  return kernel_basis(m.transpose()).transpose();
}

std::vector<std::size_t> independent_columns(const RationalMatrix& m) {
  if (m.rows() == 0) return {};
  return row_echelon(m).pivots;
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
  auto cols = independent_columns(m);
  return m.select_columns(cols);
}

std::optional<RationalVector> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  RationalMatrix bm(a.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: right-hand side row mismatch");
  const std::size_t n = a.cols();
  if (a.rows() == 0) return RationalMatrix(n, b.cols());
  auto ech = row_echelon(hstack(a, b));
  RationalMatrix x(n, b.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    std::size_t p = ech.pivots[r];
    if (p >= n) return std::nullopt;  // pivot in the augmented block
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = ech.reduced(r, n + j);
  }
  return x;
}

Rational determinant(const RationalMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix m = m0;
  const std::size_t n = m.rows();
  Rational det = 1, factor;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      factor = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, RationalMatrix::identity(m.rows()));
}

// ---------------------------------------------------------------------------
// Integer matrices

Integer determinant(const IntegerMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntegerMatrix m = m0;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += q * row[src]
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += q * m(src, j);
}
void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += q * m(i, src);
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  while (r < n && diagonal(r, r) != 0) ++r;
  return r;
}

IntegerVector SmithDecomposition::invariant_factors() const {
  IntegerVector f;
  for (std::size_t i = 0; i < rank(); ++i) f.push_back(diagonal(i, i));
  return f;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntegerMatrix d = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  IntegerMatrix v = IntegerMatrix::identity(n);
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == m || abs(d(i, j)) < best) {
            best = abs(d(i, j));
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        exhausted = true;
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide every remaining entry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(d, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithDecomposition{std::move(u), std::move(d), std::move(v), a};
}

bool lattice_membership(const SmithDecomposition& snf, std::span<const Integer> v) {
  if (v.size() != snf.source.rows())
    throw std::invalid_argument("lattice_membership: vector length mismatch");
  IntegerVector w = snf.u * v;
  const std::size_t r = snf.rank();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), snf.diagonal(i, i).get_mpz_t())) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_membership(const IntegerMatrix& b, std::span<const Integer> v) {
  return lattice_membership(smith_normal_form(b), v);
}

}  // namespace higherk
