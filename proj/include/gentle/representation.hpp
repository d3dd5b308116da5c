#pragma once

#include <cstddef>
#include <vector>

#include "gentle/matrix.hpp"
#include "gentle/multipoly.hpp"
#include "gentle/poly_matrix.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

/// Representation of the quiver: a vector space k^{dims[i]} per vertex and a
/// dims[head] x dims[tail] matrix per arrow. Modules over the algebra are the
/// representations on which every relation acts by zero.
template <class T>
struct Representation {
  DimensionVector dims;
  std::vector<Matrix<T>> maps;

  long long total_dimension() const { return dims.sum(); }
};

using SymbolicRepresentation = Representation<MultiPoly>;
using RationalRepresentation = Representation<Rational>;

template <class T>
Representation<T> zero_representation(const GentleAlgebra& alg, const DimensionVector& dims) {
  Representation<T> rep{dims, {}};
  for (std::size_t a = 0; a < alg.arrow_count(); ++a)
    rep.maps.emplace_back(dims[alg.arrow(a).head], dims[alg.arrow(a).tail]);
  return rep;
}

template <class T>
void check_shapes(const GentleAlgebra& alg, const Representation<T>& rep) {
  if (rep.dims.size() != alg.vertex_count() || rep.maps.size() != alg.arrow_count())
    throw DimensionError("representation does not match the quiver");
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& m = rep.maps[a];
    if (m.rows() != static_cast<std::size_t>(rep.dims[alg.arrow(a).head]) ||
        m.cols() != static_cast<std::size_t>(rep.dims[alg.arrow(a).tail]))
      throw DimensionError("matrix of arrow '" + alg.arrow(a).name + "' has the wrong shape");
  }
}

/// Matrix of a path: product of arrow matrices, last arrow leftmost; identity for the empty path.
template <class T>
Matrix<T> path_matrix(const Representation<T>& rep, const Path& p) {
  Matrix<T> m = Matrix<T>::identity(static_cast<std::size_t>(rep.dims[p.tail]));
  for (auto a : p.arrows) m = rep.maps[a] * m;
  return m;
}

/// True if every generator of the ideal acts by zero.
template <class T>
bool relations_vanish(const GentleAlgebra& alg, const Representation<T>& rep) {
  for (const auto& [a, b] : relation_pairs(alg))
    if (!(rep.maps[b] * rep.maps[a]).is_zero()) return false;
  return true;
}

/// Direct sum; at each vertex the summands' bases are concatenated in order.
template <class T>
Representation<T> direct_sum(const GentleAlgebra& alg, const std::vector<Representation<T>>& parts) {
  DimensionVector dims(alg.vertex_count(), 0);
  for (const auto& p : parts) dims = dims + p.dims;
  Representation<T> out = zero_representation<T>(alg, dims);
  std::vector<std::size_t> off(alg.vertex_count(), 0);
  for (const auto& p : parts) {
    for (std::size_t a = 0; a < alg.arrow_count(); ++a)
      out.maps[a].set_block(off[alg.arrow(a).head], off[alg.arrow(a).tail], p.maps[a]);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) off[v] += static_cast<std::size_t>(p.dims[v]);
  }
  return out;
}

inline RationalRepresentation specialize(const SymbolicRepresentation& rep, const Assignment& values) {
  RationalRepresentation out{rep.dims, {}};
  for (const auto& m : rep.maps) out.maps.push_back(specialize(m, values));
  return out;
}

inline SymbolicRepresentation to_symbolic(const RationalRepresentation& rep) {
  SymbolicRepresentation out{rep.dims, {}};
  for (const auto& m : rep.maps) out.maps.push_back(to_poly(m));
  return out;
}

/// Base change g . M with (g . M)(a) = g(ha) M(a) g(ta)^{-1}.
inline RationalRepresentation act(const GentleAlgebra& alg, const std::vector<RationalMatrix>& g,
                                  const RationalRepresentation& rep) {
  RationalRepresentation out = rep;
  std::vector<RationalMatrix> ginv;
  for (const auto& x : g) ginv.push_back(inverse(x));
  for (std::size_t a = 0; a < alg.arrow_count(); ++a)
    out.maps[a] = g[alg.arrow(a).head] * rep.maps[a] * ginv[alg.arrow(a).tail];
  return out;
}

}  // namespace gentle
