#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gentle/homalg.hpp"
#include "gentle/poly_matrix.hpp"
#include "gentle/updown.hpp"

namespace gentle {

/// theta^X(v) = multiplicity of P_v in P0 minus multiplicity in P1.
inline Weight weight_of(const GentleAlgebra& alg, const ProjectivePresentation& pres) {
  Weight theta(alg.vertex_count(), 0);
  for (auto v : pres.p0) ++theta[v];
  for (auto v : pres.p1) --theta[v];
  return theta;
}

/// Matrix of Hom(F, M): Hom(P0, M) = sum_u M(x_u) -> Hom(P1, M) = sum_s M(x_s),
/// block (s, u) = sum of kappa * M(rho) over the terms of F's entry.
inline PolyMatrix hom_matrix(const GentleAlgebra& alg, const ProjectivePresentation& pres,
                             const SymbolicRepresentation& m) {
  check_shapes(alg, m);
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto x : pres.p1) row_off.push_back(row_off.back() + static_cast<std::size_t>(m.dims[x]));
  for (auto x : pres.p0) col_off.push_back(col_off.back() + static_cast<std::size_t>(m.dims[x]));
  PolyMatrix out(row_off.back(), col_off.back());
  for (std::size_t s = 0; s < pres.p1.size(); ++s)
    for (std::size_t u = 0; u < pres.p0.size(); ++u)
      for (const auto& term : pres.f[s][u]) {
        if (term.path.tail != pres.p0[u] || term.path.head != pres.p1[s])
          throw InvariantError("presentation entry with mismatched path endpoints");
        PolyMatrix block = term.coefficient * path_matrix(m, term.path);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c)
            if (!block(r, c).is_zero()) out(row_off[s] + r, col_off[u] + c) += block(r, c);
      }
  return out;
}

/// c^X(M) = det Hom(F, M) for the presentation F of X; symbolic entries stay symbolic.
inline MultiPoly schofield_si(const GentleAlgebra& alg, const ProjectivePresentation& pres,
                              const SymbolicRepresentation& m) {
  long long pairing = weight_pairing(weight_of(alg, pres), m.dims);
  if (pairing != 0)
    throw DimensionError("theta^X(dim M) = " + std::to_string(pairing) + ", so Hom(F, M) is not square");
  return poly_det(hom_matrix(alg, pres, m));
}

/// Rational value of c^X(M) with the presentation's parameters set by `values`.
inline Rational schofield_si_at(const GentleAlgebra& alg, const ProjectivePresentation& pres,
                                const RationalRepresentation& m, const Assignment& values) {
  long long pairing = weight_pairing(weight_of(alg, pres), m.dims);
  if (pairing != 0)
    throw DimensionError("theta^X(dim M) = " + std::to_string(pairing) + ", so Hom(F, M) is not square");
  return determinant(specialize(hom_matrix(alg, pres, to_symbolic(m)), values));
}

/// unit * x^p * y^l * extra, where extra is (x - y) for a band against itself and 1 otherwise.
struct ExponentPair {
  int p = 0;
  int l = 0;
  Rational unit = 0;
  MultiPoly value;
};

/// Splits `value` as unit * x^p * y^l * divisor by exact trial division; throws if the
/// cofactor is not a nonzero constant.
inline ExponentPair factor_monomial_times(const MultiPoly& value, const std::string& x, const std::string& y,
                                          const MultiPoly& divisor) {
  if (value.is_zero()) throw InvariantError("semi-invariant vanishes identically");
  ExponentPair out;
  out.value = value;
  auto rest = value.try_divide(divisor);
  if (!rest) throw InvariantError("expected factor (" + divisor.to_string() + ") missing from " + value.to_string());
  MultiPoly cur = *rest;
  const MultiPoly vx = MultiPoly::variable(x), vy = MultiPoly::variable(y);
  while (!cur.is_constant()) {
    if (auto q = cur.try_divide(vx)) {
      cur = *q;
      ++out.p;
    } else if (auto q2 = cur.try_divide(vy)) {
      cur = *q2;
      ++out.l;
    } else {
      throw InvariantError("semi-invariant " + value.to_string() + " has an unexpected factor " + cur.to_string());
    }
  }
  out.unit = cur.constant_value();
  return out;
}

/// Data of one indecomposable band component (d_i, r_i): its graph must be a single band.
inline UpDownData single_band_data(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  auto data = updown_data(alg, d, r);
  if (data.components.size() != 1 || data.bands.size() != 1)
    throw DomainError("(d, r) is not an indecomposable regular component");
  return data;
}

/// Presentation of M(d, r, lambda) and the module M(d, r, mu), with lambda and mu symbolic.
struct BandPair {
  UpDownData data;
  ProjectivePresentation presentation;  // in "lambda"
  SymbolicRepresentation module;        // in "mu"
};

inline BandPair band_pair(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  auto data = single_band_data(alg, d, r);
  auto pres = band_presentation(alg, data, {MultiPoly::variable("lambda")});
  auto mod = updown_module(alg, data, {MultiPoly::variable("mu")});
  return {std::move(data), std::move(pres), std::move(mod)};
}

/// c^{M(d,r,lambda)}(M(d,r,mu)) = unit * lambda^p * mu^l * (lambda - mu).
inline ExponentPair band_exponents(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  auto bp = band_pair(alg, d, r);
  MultiPoly value = schofield_si(alg, bp.presentation, bp.module);
  return factor_monomial_times(value, "lambda", "mu", MultiPoly::variable("lambda") - MultiPoly::variable("mu"));
}

/// c^{M(d_i,r_i,lambda)}(M(d_j,r_j,mu)) for two different band components: unit * lambda^a * mu^b.
inline ExponentPair cross_exponents(const GentleAlgebra& alg, const DimensionVector& di, const RankFunction& ri,
                                    const DimensionVector& dj, const RankFunction& rj) {
  auto x = band_pair(alg, di, ri);
  auto m = band_pair(alg, dj, rj);
  MultiPoly value = schofield_si(alg, x.presentation, m.module);
  return factor_monomial_times(value, "lambda", "mu", MultiPoly(1));
}

/// The band families of a regular component's generic decomposition.
struct BandFamilies {
  GenericDecomposition decomposition;
  std::vector<std::size_t> entries;  // indices of band entries
  std::vector<DimensionVector> dims;
  std::vector<RankFunction> ranks;
  std::vector<int> multiplicity;

  std::size_t size() const { return entries.size(); }
};

inline BandFamilies band_families(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  BandFamilies fam;
  fam.decomposition = generic_decomposition(alg, d, r);
  if (!fam.decomposition.all_bands()) throw DomainError("the component is not regular: its graph has a string");
  fam.entries = fam.decomposition.band_entries();
  for (auto e : fam.entries) {
    fam.dims.push_back(fam.decomposition.entries[e].dim);
    fam.ranks.push_back(fam.decomposition.entries[e].rank);
    fam.multiplicity.push_back(fam.decomposition.entries[e].multiplicity);
  }
  return fam;
}

/// X_mu = sum over families i and j of M(d_i, r_i, mu(i, j)), in that order.
inline RationalRepresentation generic_band_module(const GentleAlgebra& alg, const BandFamilies& fam,
                                                  const std::vector<std::vector<Rational>>& mu) {
  if (mu.size() != fam.size()) throw DomainError("one parameter list per band family is required");
  std::vector<RationalRepresentation> parts;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (mu[i].size() != static_cast<std::size_t>(fam.multiplicity[i]))
      throw DomainError("family " + std::to_string(i + 1) + " needs " + std::to_string(fam.multiplicity[i]) +
                        " parameter(s)");
    auto data = single_band_data(alg, fam.dims[i], fam.ranks[i]);
    for (const auto& value : mu[i]) {
      if (value == 0) throw DomainError("band parameters must be nonzero");
      parts.push_back(specialize(updown_module(alg, data, {MultiPoly(value)}), {}));
    }
  }
  return direct_sum(alg, parts);
}

namespace detail {

// Sign of the permutation taking position k to perm[k].
inline int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t j = k; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Sign of reordering Hom(P, X_mu) coordinates from (slot, summand, basis) to (summand, slot, basis).
inline int block_reorder_sign(const std::vector<std::size_t>& slots, const std::vector<DimensionVector>& summand_dims) {
  std::vector<std::tuple<std::size_t, std::size_t, int>> labels;
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::size_t j = 0; j < summand_dims.size(); ++j)
      for (int k = 0; k < summand_dims[j][slots[s]]; ++k) labels.emplace_back(j, s, k);
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  return permutation_sign(order);
}

}  // namespace detail

/// Both sides of the closed formula for c^{M(d_i,r_i,lambda)}(X_mu).
struct MultiBandCheck {
  Rational lhs;
  Rational rhs;
  bool matches = false;
  int reorder_sign = 1;
  ExponentPair own;                 // exponents of family i against itself
  std::vector<ExponentPair> cross;  // per family i' (own slot left default)
};

/// Evaluates c^{M(d_i,r_i,lambda)} on X_mu by a direct determinant and compares it with
///   sign * prod_j [u lambda^p mu_j^l (lambda - mu_j)] * prod_{i' != i} prod_j [u' lambda^a mu^b]
/// where the exponents come from the symbolic one- and two-family determinants.
inline MultiBandCheck multi_band_eval(const GentleAlgebra& alg, const BandFamilies& fam, std::size_t i,
                                      const Rational& lambda, const std::vector<std::vector<Rational>>& mu) {
  if (i >= fam.size()) throw DomainError("band family index out of range");
  if (lambda == 0) throw DomainError("lambda must be nonzero");
  for (const auto& list : mu) {
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        if (list[a] == list[b]) throw DomainError("parameters within a band family must be pairwise distinct");
  }
  MultiBandCheck out;
  auto x_data = single_band_data(alg, fam.dims[i], fam.ranks[i]);
  auto pres = band_presentation(alg, x_data, {MultiPoly(lambda)});
  auto x_mu = generic_band_module(alg, fam, mu);
  out.lhs = schofield_si_at(alg, pres, x_mu, {});

  std::vector<DimensionVector> summand_dims;
  for (std::size_t k = 0; k < fam.size(); ++k)
    for (int j = 0; j < fam.multiplicity[k]; ++j) summand_dims.push_back(fam.dims[k]);
  out.reorder_sign = detail::block_reorder_sign(pres.p1, summand_dims) * detail::block_reorder_sign(pres.p0, summand_dims);

  out.own = band_exponents(alg, fam.dims[i], fam.ranks[i]);
  out.cross.resize(fam.size());
  Rational rhs = out.reorder_sign;
  auto power = [](Rational base, int e) {
    Rational acc = 1;
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
  };
  for (std::size_t k = 0; k < fam.size(); ++k) {
    if (k == i) {
      for (const auto& m : mu[k])
        rhs *= out.own.unit * power(lambda, out.own.p) * power(m, out.own.l) * (lambda - m);
    } else {
      out.cross[k] = cross_exponents(alg, fam.dims[i], fam.ranks[i], fam.dims[k], fam.ranks[k]);
      for (const auto& m : mu[k]) rhs *= out.cross[k].unit * power(lambda, out.cross[k].p) * power(m, out.cross[k].l);
    }
  }
  out.rhs = rhs;
  out.matches = out.lhs == out.rhs;
  return out;
}

/// Outcome of comparing the transcendence-basis ratios on X_mu and X_nu.
struct SeparationResult {
  bool ratios_agree = false;
  bool isomorphic = false;  // each family's parameter multisets coincide
  std::vector<std::vector<Rational>> ratios_mu;
  std::vector<std::vector<Rational>> ratios_nu;
};

/// Ratios c^{M(d_i,r_i,lambda(i,j))}(X) / c^{M(d_i,r_i,lambda(i,j+1))}(X) for j = 0..m_i-1.
inline std::vector<std::vector<Rational>> basis_ratios(const GentleAlgebra& alg, const BandFamilies& fam,
                                                       const std::vector<std::vector<Rational>>& grid,
                                                       const RationalRepresentation& x) {
  std::vector<std::vector<Rational>> out(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto data = single_band_data(alg, fam.dims[i], fam.ranks[i]);
    std::vector<Rational> values;
    for (const auto& lam : grid[i]) {
      auto pres = band_presentation(alg, data, {MultiPoly(lam)});
      values.push_back(schofield_si_at(alg, pres, x, {}));
    }
    for (int j = 0; j < fam.multiplicity[i]; ++j) {
      if (values[j + 1] == 0)
        throw DomainError("ratio denominator vanishes: grid value " + grid[i][j + 1].get_str() + " of family " +
                          std::to_string(i + 1) + " hits a module parameter");
      out[i].push_back(values[j] / values[j + 1]);
    }
  }
  return out;
}

inline SeparationResult separation_test(const GentleAlgebra& alg, const BandFamilies& fam,
                                        const std::vector<std::vector<Rational>>& grid,
                                        const std::vector<std::vector<Rational>>& mu,
                                        const std::vector<std::vector<Rational>>& nu) {
  if (grid.size() != fam.size()) throw DomainError("one grid per band family is required");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (grid[i].size() != static_cast<std::size_t>(fam.multiplicity[i] + 1))
      throw DomainError("grid of family " + std::to_string(i + 1) + " needs m_i + 1 values");
    for (std::size_t a = 0; a < grid[i].size(); ++a) {
      if (grid[i][a] == 0) throw DomainError("grid values must be nonzero");
      for (std::size_t b = a + 1; b < grid[i].size(); ++b)
        if (grid[i][a] == grid[i][b]) throw DomainError("grid values must be pairwise distinct");
    }
  }
  SeparationResult out;
  out.ratios_mu = basis_ratios(alg, fam, grid, generic_band_module(alg, fam, mu));
  out.ratios_nu = basis_ratios(alg, fam, grid, generic_band_module(alg, fam, nu));
  out.ratios_agree = out.ratios_mu == out.ratios_nu;
  out.isomorphic = true;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto a = mu[i], b = nu[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) out.isomorphic = false;
  }
  return out;
}

}  // namespace gentle
