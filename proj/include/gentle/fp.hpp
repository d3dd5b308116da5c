#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gentle/error.hpp"

namespace gentle {

/// Largest prime accepted for finite-field work.
inline constexpr std::uint32_t kMaxPrime = 13;

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_small_prime(std::uint32_t p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw DomainError("prime must be a prime <= " + std::to_string(kMaxPrime) + ", got " + std::to_string(p));
}

inline std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("no inverse of 0 mod " + std::to_string(p));
  std::uint32_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

using FpVector = std::vector<std::uint32_t>;

/// Dense matrix over F_p with entries in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    require_small_prime(p);
  }

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    data_[r * cols_ + c] = static_cast<std::uint32_t>(m);
  }

  FpVector apply(const FpVector& x) const {
    if (x.size() != cols_) throw DimensionError("FpMatrix::apply shape mismatch");
    FpVector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint32_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc = (acc + (*this)(r, c) * x[c]) % p_;
      y[r] = acc;
    }
    return y;
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_ || a.p_ != b.p_) throw DimensionError("FpMatrix product mismatch");
    FpMatrix out(a.p_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) acc = (acc + a(i, k) * b(k, j)) % a.p_;
        out.data_[i * out.cols_ + j] = acc;
      }
    return out;
  }

  bool is_zero() const {
    for (auto x : data_)
      if (x) return false;
    return true;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pr = row;
      while (pr < rows_ && (*this)(pr, col) == 0) ++pr;
      if (pr == rows_) continue;
      for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[pr * cols_ + c], data_[row * cols_ + c]);
      std::uint32_t inv = fp_inverse((*this)(row, col), p_);
      for (std::size_t c = 0; c < cols_; ++c) data_[row * cols_ + c] = data_[row * cols_ + c] * inv % p_;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        std::uint32_t f = (*this)(r, col);
        if (!f) continue;
        for (std::size_t c = 0; c < cols_; ++c)
          data_[r * cols_ + c] = (data_[r * cols_ + c] + (p_ - f) * data_[row * cols_ + c]) % p_;
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

inline std::size_t fp_rank(FpMatrix m) { return m.reduce().size(); }

/// Basis of the right kernel over F_p; its size is cols - rank.
inline std::vector<FpVector> fp_kernel(FpMatrix m) {
  const std::uint32_t p = m.prime();
  auto pivots = m.reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m(i, f)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gentle
