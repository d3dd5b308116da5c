#pragma once

// Test-only reference implementations, kept independent of the library's algorithms.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gentle/gentle.hpp"

namespace oracle {

using gentle::MultiPoly;
using gentle::Rational;

inline std::string quiver_path(const std::string& name) { return std::string(GENTLE_QUIVER_DIR) + "/" + name; }

inline gentle::GentleAlgebra load(const std::string& name) {
  std::ifstream in(quiver_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return gentle::parse_quiver(ss.str());
}

/// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const gentle::Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !(term == T(0)); ++i) term = term * m(i, perm[i]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank by plain row reduction on a vector-of-vectors copy.
inline std::size_t rref_rank(const gentle::RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Number of x in F_p^n with m x = 0, by scanning all p^n vectors.
inline std::size_t fp_kernel_size(const gentle::FpMatrix& m) {
  const std::uint32_t p = m.prime();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) total *= p;
  std::size_t count = 0;
  std::vector<std::uint32_t> x(m.cols(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t v = k;
    for (auto& xi : x) {
      xi = v % p;
      v /= p;
    }
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s += std::uint64_t(m(r, c)) * x[c];
      zero = s % p == 0;
    }
    count += zero;
  }
  return count;
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return gentle::make_rational(num(rng), den(rng));
}

inline gentle::RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 5) {
  gentle::RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, bound);
  return m;
}

/// Random quiver on vertices 0..n-1 whose colors are increasing paths, each vertex on at most two
/// colors. Parallel arrows are allowed. Some draws are rejected by the gentle axioms; callers retry.
inline gentle::QuiverDeclaration random_triangular_declaration(std::mt19937_64& rng, std::size_t n, bool saturate) {
  gentle::QuiverDeclaration decl;
  decl.name = "random";
  for (std::size_t v = 0; v < n; ++v) decl.vertices.push_back("v" + std::to_string(v));
  std::vector<int> load(n, 0);
  std::uniform_int_distribution<int> colors_dist(1, static_cast<int>(n));
  int colors = colors_dist(rng);
  for (int s = 0; s < colors; ++s) {
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < n; ++v)
      if (load[v] < 2) pool.push_back(v);
    if (pool.size() < 2) break;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(pool.size(), 4));
    std::vector<std::size_t> verts(pool.begin(), pool.begin() + static_cast<long>(len(rng)));
    std::sort(verts.begin(), verts.end());
    for (auto v : verts) ++load[v];
    for (std::size_t k = 0; k + 1 < verts.size(); ++k)
      decl.arrows.push_back({"c" + std::to_string(s) + "_" + std::to_string(k), decl.vertices[verts[k]],
                             decl.vertices[verts[k + 1]], "c" + std::to_string(s)});
  }
  if (saturate)
    for (std::size_t v = 0; v < n; ++v)
      if (load[v] < 2) return random_triangular_declaration(rng, n, saturate);
  return decl;
}

inline std::optional<gentle::GentleAlgebra> random_gentle(std::mt19937_64& rng, std::size_t n, bool saturate = false) {
  try {
    return gentle::GentleAlgebra::build(random_triangular_declaration(rng, n, saturate));
  } catch (const gentle::Error&) {
    return std::nullopt;
  }
}

/// Every dimension vector with entries in [0, bound].
inline std::vector<gentle::DimensionVector> all_dimension_vectors(std::size_t n, int bound) {
  std::vector<gentle::DimensionVector> out;
  gentle::DimensionVector d(n, 0);
  while (true) {
    out.push_back(d);
    std::size_t i = 0;
    while (i < n && d[i] == bound) d[i++] = 0;
    if (i == n) break;
    ++d[i];
  }
  return out;
}

/// Every rank function with 0 <= r(a) <= min(d(ta), d(ha)), without the junction condition.
inline std::vector<gentle::RankFunction> all_bounded_rank_functions(const gentle::GentleAlgebra& alg,
                                                                    const gentle::DimensionVector& d) {
  std::vector<gentle::RankFunction> out;
  const std::size_t m = alg.arrow_count();
  gentle::RankFunction r(m, 0);
  auto bound = [&](std::size_t a) { return std::min(d[alg.arrow(a).tail], d[alg.arrow(a).head]); };
  while (true) {
    out.push_back(r);
    std::size_t i = 0;
    while (i < m && r[i] == bound(i)) r[i++] = 0;
    if (i == m) break;
    ++r[i];
  }
  return out;
}

/// A random up-and-down module (rank lowered at random arrows, so not always generic),
/// conjugated by random invertible matrices.
inline gentle::RationalRepresentation random_representation(const gentle::GentleAlgebra& alg, std::mt19937_64& rng,
                                                            int max_dim) {
  std::uniform_int_distribution<int> dist(0, max_dim);
  gentle::DimensionVector d(alg.vertex_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = dist(rng);
  auto rs = gentle::maximal_rank_functions(alg, d);
  auto r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
  std::uniform_int_distribution<int> down(0, 1);
  for (std::size_t a = 0; a < r.size(); ++a) r[a] = std::max(0, r[a] - down(rng));
  auto data = gentle::updown_data(alg, d, r);
  std::vector<MultiPoly> lambda;
  std::uniform_int_distribution<int> value(1, 9);
  for (std::size_t k = 0; k < data.band_count(); ++k) lambda.emplace_back(value(rng));
  auto m = gentle::specialize(gentle::updown_module(alg, data, lambda), {});
  std::vector<gentle::RationalMatrix> g;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    gentle::RationalMatrix x;
    do {
      x = random_matrix(rng, static_cast<std::size_t>(d[v]), static_cast<std::size_t>(d[v]), 3);
    } while (gentle::determinant(x) == 0);
    g.push_back(x);
  }
  return gentle::act(alg, g, m);
}

/// Regular (quiver, d, r) triples whose generic module is a single band of multiplicity one.
struct RegularFixture {
  std::string label;
  gentle::GentleAlgebra alg;
  gentle::DimensionVector d;
  gentle::RankFunction r;
};

inline std::vector<RegularFixture> regular_band_fixtures() {
  std::vector<RegularFixture> out;
  auto a2 = load("a2.quiver");
  out.push_back({"a2", a2, gentle::parse_dimension_vector(a2, "1,2,1"), *gentle::regular_rank_function(a2, gentle::parse_dimension_vector(a2, "1,2,1"))});
  auto closed = load("closedpath.quiver");
  auto dc = gentle::parse_dimension_vector(closed, "1,1,1,1,1,1");
  out.push_back({"closedpath", closed, dc, *gentle::regular_rank_function(closed, dc)});
  auto wide = load("wide.quiver");
  auto dw = gentle::parse_dimension_vector(wide, "0,1,2,2,1");
  out.push_back({"wide", wide, dw, *gentle::regular_rank_function(wide, dw)});
  std::mt19937_64 rng(20240611);
  int found = 0;
  while (found < 4) {
    auto alg = random_gentle(rng, 5, true);
    if (!alg) continue;
    for (const auto& d : all_dimension_vectors(alg->vertex_count(), 2)) {
      if (d.sum() < 4) continue;
      auto r = gentle::regular_rank_function(*alg, d);
      if (!r) continue;
      auto dec = gentle::generic_decomposition(*alg, d, *r);
      if (dec.entries.size() == 1 && dec.entries[0].kind == gentle::ComponentKind::Band &&
          dec.entries[0].multiplicity == 1) {
        out.push_back({"random" + std::to_string(found), *alg, d, *r});
        ++found;
        break;
      }
    }
  }
  return out;
}

}  // namespace oracle
