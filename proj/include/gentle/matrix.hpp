#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "gentle/error.hpp"
#include "gentle/rational.hpp"

namespace gentle {

/// Dense row-major matrix over an arbitrary commutative ring T.
/// T must be constructible from int (0 and 1).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
      throw DimensionError("block does not fit");
    for (std::size_t r = 0; r < block.rows_; ++r)
      for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == T(0)) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(pr, row);
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the right kernel, one basis vector per column of the result.
inline RationalMatrix kernel_basis(const RationalMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RationalMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free[k]);
  }
  return basis;
}

inline Rational determinant(RationalMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && m(pr, col) == 0) ++pr;
    if (pr == n) return 0;
    if (pr != col) {
      m.swap_rows(pr, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Solves a * x = b for x when a has full column rank; throws if b is not in the column space.
inline RationalMatrix solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row count mismatch");
  RationalMatrix aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  Echelon e = rref(aug);
  if (e.pivots.size() != a.cols() ||
      (!e.pivots.empty() && e.pivots.back() >= a.cols()))
    throw DomainError("solve: system is singular or inconsistent");
  for (std::size_t r = a.cols(); r < e.reduced.rows(); ++r)
    for (std::size_t c = a.cols(); c < aug.cols(); ++c)
      if (e.reduced(r, c) != 0) throw DomainError("solve: right-hand side outside the column space");
  RationalMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, a.cols() + c);
  return x;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  return solve_full_column_rank(m, RationalMatrix::identity(m.rows()));
}

/// Indices k such that the standard vectors e_k, added greedily in order, extend the
/// column space of `span` to the whole ambient space. Deterministic complement section.
inline std::vector<std::size_t> complement_coordinates(const RationalMatrix& span) {
  const std::size_t n = span.rows();
  std::vector<std::size_t> picked;
  RationalMatrix current = span;
  std::size_t r = rank(current);
  for (std::size_t k = 0; k < n && r < n; ++k) {
    RationalMatrix trial(n, current.cols() + 1);
    trial.set_block(0, 0, current);
    trial(k, current.cols()) = 1;
    std::size_t rt = rank(trial);
    if (rt > r) {
      picked.push_back(k);
      current = std::move(trial);
      r = rt;
    }
  }
  return picked;
}

/// Horizontal concatenation of matrices with equal row counts.
template <class T>
Matrix<T> hconcat(const std::vector<Matrix<T>>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("hconcat: row count mismatch");
    cols += b.cols();
  }
  Matrix<T> out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c0, b);
    c0 += b.cols();
  }
  return out;
}

}  // namespace gentle
