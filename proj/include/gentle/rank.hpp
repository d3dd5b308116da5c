#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

/// Result of a rank-function check; lists every violated inequality.
struct RankCheck {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// The pair (d, r) naming the closed subvariety of modules with rank V(a) <= r(a).
/// Flags are only set by an explicit check, never inferred.
struct ComponentDescriptor {
  DimensionVector d;
  RankFunction r;
  std::optional<bool> is_maximal;
  std::optional<bool> is_regular;
  std::optional<bool> is_indecomposable;
};

namespace detail {
inline void check_lengths(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  if (d.size() != alg.vertex_count()) throw DimensionError("dimension vector length does not match the quiver");
  if (r.size() != alg.arrow_count()) throw DimensionError("rank function length does not match the quiver");
}
}  // namespace detail

inline RankCheck is_rank_function(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  detail::check_lengths(alg, d, r);
  RankCheck out;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] < 0) out.violations.push_back("negative dimension at vertex " + alg.vertex_name(v));
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arr = alg.arrow(a);
    int bound = std::min(d[arr.tail], d[arr.head]);
    if (r[a] < 0) out.violations.push_back("negative rank on " + arr.name);
    if (r[a] > bound)
      out.violations.push_back("r(" + arr.name + ") = " + std::to_string(r[a]) + " exceeds min(d(" +
                               alg.vertex_name(arr.tail) + "), d(" + alg.vertex_name(arr.head) +
                               ")) = " + std::to_string(bound));
  }
  for (const auto& [a, b] : relation_pairs(alg)) {
    std::size_t i = alg.arrow(a).head;
    if (r[a] + r[b] > d[i])
      out.violations.push_back("r(" + alg.arrow(a).name + ") + r(" + alg.arrow(b).name + ") = " +
                               std::to_string(r[a] + r[b]) + " exceeds d(" + alg.vertex_name(i) +
                               ") = " + std::to_string(d[i]));
  }
  return out;
}

/// True if no single coordinate of a valid r can be raised by one.
/// The valid rank functions form a down-closed set, so this is coordinate-wise maximality.
inline bool is_maximal_rank_function(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  if (!is_rank_function(alg, d, r)) return false;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    RankFunction up = r;
    ++up[a];
    if (is_rank_function(alg, d, up)) return false;
  }
  return true;
}

namespace detail {

// Maximal rank sequences along one color path with vertices i_0..i_n.
inline std::vector<std::vector<int>> maximal_along_path(const std::vector<int>& dims) {
  const std::size_t n = dims.size() - 1;
  std::vector<int> upper(n);
  for (std::size_t j = 0; j < n; ++j) upper[j] = std::min(dims[j], dims[j + 1]);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      for (std::size_t k = 0; k < n; ++k) {
        bool blocked = cur[k] == upper[k] || (k > 0 && cur[k - 1] + cur[k] == dims[k]) ||
                       (k + 1 < n && cur[k] + cur[k + 1] == dims[k + 1]);
        if (!blocked) return;
      }
      out.push_back(cur);
      return;
    }
    int hi = upper[j];
    if (j > 0) hi = std::min(hi, dims[j] - cur[j - 1]);
    for (int v = 0; v <= hi; ++v) {
      cur[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// Every maximal rank function for d, in lexicographic order of the rank values
/// listed in arrow file order. Constraints only couple arrows of one color, so the
/// maximal set is the product of the per-color maximal sets.
inline std::vector<RankFunction> maximal_rank_functions(const GentleAlgebra& alg, const DimensionVector& d) {
  if (d.size() != alg.vertex_count()) throw DimensionError("dimension vector length does not match the quiver");
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] < 0) throw DomainError("negative dimension at vertex " + alg.vertex_name(v));
  std::vector<RankFunction> acc{RankFunction(alg.arrow_count(), 0)};
  for (std::size_t s = 0; s < alg.color_count(); ++s) {
    std::vector<int> dims;
    for (auto v : alg.color_path_vertices(s)) dims.push_back(d[v]);
    auto options = detail::maximal_along_path(dims);
    std::vector<RankFunction> next;
    for (const auto& base : acc)
      for (const auto& opt : options) {
        RankFunction r = base;
        const auto& path = alg.color_path(s);
        for (std::size_t k = 0; k < path.size(); ++k) r[path[k]] = opt[k];
        next.push_back(std::move(r));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

/// Regularity: every vertex of the up-and-down graph has degree two. Along each color
/// path a_1..a_n through i_0..i_n this means r(a_1) = d(i_0), r(a_j) + r(a_{j+1}) = d(i_j)
/// and r(a_n) = d(i_n); a vertex that meets fewer than two colors must have dimension 0.
inline bool is_regular(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  if (!is_rank_function(alg, d, r)) throw DomainError("not a rank function for this dimension vector");
  for (std::size_t s = 0; s < alg.color_count(); ++s) {
    const auto& path = alg.color_path(s);
    auto verts = alg.color_path_vertices(s);
    if (r[path.front()] != d[verts.front()] || r[path.back()] != d[verts.back()]) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
      if (r[path[j]] + r[path[j + 1]] != d[verts[j + 1]]) return false;
  }
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    if (alg.colors_at(v).size() < 2 && d[v] != 0) return false;
  return true;
}

/// The unique regular rank function for d, if any, via r(a_1) = d(i_0),
/// r(a_{j+1}) = d(i_j) - r(a_j) along each color path.
inline std::optional<RankFunction> regular_rank_function(const GentleAlgebra& alg, const DimensionVector& d) {
  if (d.size() != alg.vertex_count()) throw DimensionError("dimension vector length does not match the quiver");
  RankFunction r(alg.arrow_count(), 0);
  for (std::size_t s = 0; s < alg.color_count(); ++s) {
    const auto& path = alg.color_path(s);
    auto verts = alg.color_path_vertices(s);
    r[path[0]] = d[verts[0]];
    for (std::size_t j = 1; j < path.size(); ++j) {
      r[path[j]] = d[verts[j]] - r[path[j - 1]];
      if (r[path[j]] < 0) return std::nullopt;
    }
  }
  if (!is_rank_function(alg, d, r) || !is_regular(alg, d, r)) return std::nullopt;
  return r;
}

}  // namespace gentle
