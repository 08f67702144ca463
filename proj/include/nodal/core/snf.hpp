#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nodal/core/arith.hpp"
#include "nodal/core/matrix.hpp"

namespace nodal {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank.
struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
  /// Diagonal entries different from 1: the torsion of the cokernel.
  std::vector<Integer> nontrivial_factors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i)
      if (D(i, i) != 1) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

inline void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  // row_dst -= q * row_src
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_zero(m(src, c))) m(dst, c) -= q * m(src, c);
}

inline void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!is_zero(m(r, src))) m(r, dst) -= q * m(r, src);
}

/// Extended gcd with g >= 0 and a*x + b*y = g.
inline void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace detail

/// Smith normal form. Pivot: smallest nonzero absolute value in the active
/// block, ties broken by row-major position.
inline SnfResult snf(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("snf of an empty matrix");
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix D = a;
  IntMatrix U = IntMatrix::identity(IntegerRing{}, m);
  IntMatrix V = IntMatrix::identity(IntegerRing{}, n);
  std::size_t t = 0;
  const std::size_t lim = std::min(m, n);
  for (; t < lim; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!is_zero(D(i, j)) && (!best || abs(D(i, j)) < abs(D(best->first, best->second)))) best = {i, j};
    if (!best) break;
    D.swap_rows(t, best->first);
    U.swap_rows(t, best->first);
    D.swap_cols(t, best->second);
    V.swap_cols(t, best->second);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(D(i, t))) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        detail::row_axpy(D, i, t, q);
        detail::row_axpy(U, i, t, q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(D(t, j))) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        detail::col_axpy(D, j, t, q);
        detail::col_axpy(V, j, t, q);
      }
      // Remainders are strictly smaller than the pivot; bring the smallest forward.
      std::optional<std::size_t> small_row, small_col;
      for (std::size_t i = t + 1; i < m; ++i)
        if (!is_zero(D(i, t)) && (!small_row || abs(D(i, t)) < abs(D(*small_row, t)))) small_row = i;
      for (std::size_t j = t + 1; j < n; ++j)
        if (!is_zero(D(t, j)) && (!small_col || abs(D(t, j)) < abs(D(t, *small_col)))) small_col = j;
      if (small_row && (!small_col || abs(D(*small_row, t)) <= abs(D(t, *small_col)))) {
        D.swap_rows(t, *small_row);
        U.swap_rows(t, *small_row);
        changed = true;
      } else if (small_col) {
        D.swap_cols(t, *small_col);
        V.swap_cols(t, *small_col);
        changed = true;
      }
      if (changed) continue;
      // Row and column are clear; enforce divisibility of the remaining block.
      for (std::size_t i = t + 1; i < m && !changed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (is_zero(D(i, j))) continue;
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            detail::row_axpy(D, t, i, Integer(-1));
            detail::row_axpy(U, t, i, Integer(-1));
            changed = true;
            break;
          }
        }
      if (!changed) break;
    }
    if (sgn(D(t, t)) < 0) {
      for (std::size_t c = 0; c < n; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < m; ++c) U(t, c) = -U(t, c);
    }
  }
  return {std::move(D), std::move(U), std::move(V), t};
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Saturated integer kernel {x in Z^n : A x = 0}, with an integral left
/// inverse of the basis (left_inverse * basis = identity).
struct KernelLattice {
  IntMatrix basis;         // n x k, columns are a Z-basis of the kernel
  IntMatrix left_inverse;  // k x n
  std::size_t rank = 0;    // rank of A

  std::size_t dimension() const { return basis.cols(); }
};

namespace detail {

/// Column reduction of A restricted to the given rows, tracking V and V^{-1}.
inline KernelLattice kernel_from_rows(const IntMatrix& a, const std::vector<std::size_t>& rows) {
  const std::size_t n = a.cols();
  IntMatrix w(IntegerRing{}, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(rows[i], j);
  IntMatrix v = IntMatrix::identity(IntegerRing{}, n);
  IntMatrix vinv = IntMatrix::identity(IntegerRing{}, n);
  std::size_t piv = 0;
  Integer g, x, y, ag, bg, p, q;
  for (std::size_t r = 0; r < w.rows() && piv < n; ++r) {
    for (std::size_t c = piv + 1; c < n; ++c) {
      if (is_zero(w(r, c))) continue;
      xgcd(w(r, piv), w(r, c), g, x, y);
      mpz_divexact(ag.get_mpz_t(), w(r, piv).get_mpz_t(), g.get_mpz_t());
      mpz_divexact(bg.get_mpz_t(), w(r, c).get_mpz_t(), g.get_mpz_t());
      // [col_piv, col_c] <- [col_piv, col_c] * [[x, -bg], [y, ag]]
      for (std::size_t i = r; i < w.rows(); ++i) {
        p = w(i, piv);
        q = w(i, c);
        w(i, piv) = x * p + y * q;
        w(i, c) = ag * q - bg * p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        p = v(i, piv);
        q = v(i, c);
        v(i, piv) = x * p + y * q;
        v(i, c) = ag * q - bg * p;
      }
      // inverse transform acts on rows: [[ag, bg], [-y, x]]
      for (std::size_t j = 0; j < n; ++j) {
        p = vinv(piv, j);
        q = vinv(c, j);
        vinv(piv, j) = ag * p + bg * q;
        vinv(c, j) = x * q - y * p;
      }
    }
    if (!is_zero(w(r, piv))) ++piv;
  }
  return {v.submatrix(0, n, piv, n), vinv.submatrix(piv, n, 0, n), piv};
}

}  // namespace detail

/// Integer kernel of A. Rows are first thinned to a set that is independent
/// modulo a large prime; the result is then checked against every row and
/// rows that fail are added back.
inline KernelLattice integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (n == 0) throw std::invalid_argument("integer_kernel of matrix with no columns");
  const PrimeField big(2147483629u);
  std::vector<std::size_t> chosen;
  {
    std::vector<std::vector<Fp>> basis;  // echelon rows
    std::vector<std::size_t> lead;
    for (std::size_t r = 0; r < a.rows() && chosen.size() < n; ++r) {
      std::vector<Fp> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = big.from_integer(a(r, j));
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (row[lead[b]].is_zero()) continue;
        const Fp f = row[lead[b]];
        for (std::size_t j = 0; j < n; ++j) row[j] -= f * basis[b][j];
      }
      std::size_t l = 0;
      while (l < n && row[l].is_zero()) ++l;
      if (l == n) continue;
      const Fp inv = row[l].inverse();
      for (auto& e : row) e *= inv;
      basis.push_back(std::move(row));
      lead.push_back(l);
      chosen.push_back(r);
    }
  }
  for (;;) {
    KernelLattice k = detail::kernel_from_rows(a, chosen);
    if (k.dimension() == 0) return k;
    bool ok = true;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      bool row_ok = true;
      for (std::size_t c = 0; c < k.dimension() && row_ok; ++c) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(a(r, j))) s += a(r, j) * k.basis(j, c);
        row_ok = is_zero(s);
      }
      if (!row_ok) {
        chosen.push_back(r);
        ok = false;
      }
    }
    if (ok) return k;
  }
}

/// Solves basis * X = B for X, assuming the columns of B lie in the lattice
/// spanned by the basis columns. Returns nullopt if they do not.
inline std::optional<IntMatrix> coordinates_in(const KernelLattice& lattice, const IntMatrix& b) {
  if (lattice.dimension() == 0) {
    if (!b.is_zero()) return std::nullopt;
    return IntMatrix(IntegerRing{}, 0, b.cols());
  }
  IntMatrix x = lattice.left_inverse * b;
  if (!(lattice.basis * x == b)) return std::nullopt;
  return x;
}

/// Invariant factors (> 1) of the cokernel of A, i.e. the torsion of Z^m / A Z^n.
inline std::vector<Integer> torsion_of_cokernel(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  return snf(a).nontrivial_factors();
}

}  // namespace nodal
