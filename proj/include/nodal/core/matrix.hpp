#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nodal/core/arith.hpp"

namespace nodal {

/// Dense row-major matrix over a ring descriptor (RationalField, PrimeField,
/// IntegerRing).
template <class Ring>
class Matrix {
 public:
  using T = typename Ring::value_type;

  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

  static Matrix identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_rows(Ring ring, const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    Matrix s(ring_, r1 - r0, c1 - c0);
    for (std::size_t r = r0; r < r1; ++r)
      for (std::size_t c = c0; c < c1; ++c) s(r - r0, c - c0) = (*this)(r, c);
    return s;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return nodal::is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (nodal::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (nodal::is_zero(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!nodal::is_zero(v[j]) && !nodal::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix out = a;
    out.data_.insert(out.data_.end(), b.data_.begin(), b.data_.end());
    out.rows_ += b.rows_;
    return out;
  }

 private:
  Ring ring_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<RationalField>;
using FpMatrix = Matrix<PrimeField>;
using IntMatrix = Matrix<IntegerRing>;

template <Field Ring>
struct Echelon {
  Matrix<Ring> reduced;  // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows are removed from the result.
template <Field Ring>
Echelon<Ring> rref(Matrix<Ring> a) {
  using T = typename Ring::value_type;
  const Ring ring = a.ring();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    const T inv = ring.one() / a(rank, c);
    support.clear();
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!is_zero(a(rank, j))) {
        a(rank, j) *= inv;
        support.push_back(j);
      }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || is_zero(a(r, c))) continue;
      const T factor = a(r, c);
      for (std::size_t j : support) a(r, j) -= factor * a(rank, j);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {a.submatrix(0, rank, 0, a.cols()), std::move(pivots)};
}

template <Field Ring>
std::size_t rank(const Matrix<Ring>& a) {
  return rref(a).pivots.size();
}

/// Basis of {x : A x = 0}, one vector per free column of the echelon form.
template <Field Ring>
std::vector<std::vector<typename Ring::value_type>> kernel_basis(const Matrix<Ring>& a) {
  using T = typename Ring::value_type;
  const Ring ring = a.ring();
  const auto e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), ring.zero());
    v[free] = ring.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field Ring>
Matrix<Ring> rows_to_matrix(const Ring& ring, const std::vector<std::vector<typename Ring::value_type>>& rows,
                            std::size_t cols) {
  return Matrix<Ring>::from_rows(ring, rows, cols);
}

/// Row space intersection, returned in reduced row-echelon form.
template <Field Ring>
Matrix<Ring> row_space_intersection(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("row space intersection: column mismatch");
  const std::size_t n = a.cols();
  auto ann_a = kernel_basis(a.rows() ? a : Matrix<Ring>(a.ring(), 1, n));
  auto ann_b = kernel_basis(b.rows() ? b : Matrix<Ring>(b.ring(), 1, n));
  ann_a.insert(ann_a.end(), ann_b.begin(), ann_b.end());
  if (ann_a.empty()) return rref(Matrix<Ring>::identity(a.ring(), n)).reduced;
  auto both = kernel_basis(Matrix<Ring>::from_rows(a.ring(), ann_a, n));
  if (both.empty()) return Matrix<Ring>(a.ring(), 0, n);
  return rref(Matrix<Ring>::from_rows(a.ring(), both, n)).reduced;
}

/// Inverse of a square matrix over a field; throws if singular.
template <Field Ring>
Matrix<Ring> inverse(const Matrix<Ring>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<Ring> aug(a.ring(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.ring().one();
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  return e.reduced.submatrix(0, n, n, 2 * n);
}

template <class Ring>
Matrix<RationalField> to_rational(const Matrix<Ring>& a) {
  Matrix<RationalField> q(RationalField{}, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = Rational(a(i, j));
  return q;
}

inline Matrix<PrimeField> reduce_mod(const IntMatrix& a, const PrimeField& f) {
  Matrix<PrimeField> out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.from_integer(a(i, j));
  return out;
}

inline Matrix<PrimeField> reduce_mod(const QMatrix& a, const PrimeField& f) {
  Matrix<PrimeField> out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.from_rational(a(i, j));
  return out;
}

inline IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(IntegerRing{}, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace nodal
