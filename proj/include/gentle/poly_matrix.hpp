#pragma once

#include <cstddef>
#include <utility>

#include "gentle/matrix.hpp"
#include "gentle/multipoly.hpp"

namespace gentle {

using PolyMatrix = Matrix<MultiPoly>;

/// Laplace expansion along the first row. Exponential; meant for n <= 4.
inline MultiPoly cofactor_det(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  if (n == 1) return m(0, 0);
  MultiPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, kk++) = m(r, k);
      }
    MultiPoly term = m(0, c) * cofactor_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Fraction-free Bareiss elimination. Every division is exact in the polynomial ring.
inline MultiPoly bareiss_det(PolyMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot keeps intermediate polynomials small.
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      if (best == n || m(r, k).term_count() < m(best, k).term_count()) best = r;
    }
    if (best == n) return MultiPoly();
    if (best != k) {
      m.swap_rows(best, k);
      negate = !negate;
    }
    const MultiPoly pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const MultiPoly lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m(i, j) * pivot - lead * m(k, j);
        m(i, j) = num.divide_exact(prev);
      }
      m(i, k) = MultiPoly();
    }
    prev = pivot;
  }
  MultiPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Exact determinant: cofactor expansion up to 4x4, Bareiss beyond.
inline MultiPoly poly_det(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  return m.rows() <= 4 ? cofactor_det(m) : bareiss_det(m);
}

inline RationalMatrix specialize(const PolyMatrix& m, const Assignment& values) {
  return m.map([&](const MultiPoly& p) { return p.evaluate(values); });
}

/// Rank of the matrix after substituting rational values for every variable.
inline std::size_t poly_rank_at(const PolyMatrix& m, const Assignment& values) {
  return rank(specialize(m, values));
}

inline PolyMatrix to_poly(const RationalMatrix& m) {
  return m.map([](const Rational& q) { return MultiPoly(q); });
}

}  // namespace gentle
