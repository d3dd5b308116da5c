#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gentle/matrix.hpp"
#include "gentle/multipoly.hpp"
#include "gentle/quiver.hpp"
#include "gentle/representation.hpp"
#include "gentle/updown.hpp"

namespace gentle {

// ---------------------------------------------------------------------------
// Hom spaces

/// Basis of Hom(M, N): each element is one matrix per vertex.
struct HomBasis {
  std::vector<std::vector<RationalMatrix>> elements;
  std::size_t dimension() const { return elements.size(); }
};

/// Solves phi(ha) M(a) = N(a) phi(ta) for all arrows a.
inline HomBasis hom_space(const GentleAlgebra& alg, const RationalRepresentation& m, const RationalRepresentation& n) {
  check_shapes(alg, m);
  check_shapes(alg, n);
  const std::size_t nv = alg.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(m.dims[v]) * static_cast<std::size_t>(n.dims[v]);
  const std::size_t unknowns = offset[nv];
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) {
    return offset[v] + r * static_cast<std::size_t>(m.dims[v]) + c;
  };
  std::size_t eqs = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a)
    eqs += static_cast<std::size_t>(n.dims[alg.arrow(a).head]) * static_cast<std::size_t>(m.dims[alg.arrow(a).tail]);
  RationalMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const std::size_t t = alg.arrow(a).tail, h = alg.arrow(a).head;
    const auto& ma = m.maps[a];
    const auto& na = n.maps[a];
    for (std::size_t r = 0; r < static_cast<std::size_t>(n.dims[h]); ++r)
      for (std::size_t c = 0; c < static_cast<std::size_t>(m.dims[t]); ++c, ++row) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(n.dims[t]); ++k)
          if (na(r, k) != 0) sys(row, var(t, k, c)) += na(r, k);
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.dims[h]); ++k)
          if (ma(k, c) != 0) sys(row, var(h, r, k)) -= ma(k, c);
      }
  }
  RationalMatrix ker = kernel_basis(sys);
  HomBasis out;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    std::vector<RationalMatrix> phi;
    for (std::size_t v = 0; v < nv; ++v) {
      RationalMatrix f(static_cast<std::size_t>(n.dims[v]), static_cast<std::size_t>(m.dims[v]));
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = ker(var(v, r, c), b);
      phi.push_back(std::move(f));
    }
    out.elements.push_back(std::move(phi));
  }
  return out;
}

inline std::size_t hom_dim(const GentleAlgebra& alg, const RationalRepresentation& m, const RationalRepresentation& n) {
  return hom_space(alg, m, n).dimension();
}

// ---------------------------------------------------------------------------
// Projectives

/// P_x with basis the ideal-avoiding paths starting at x, grouped by end vertex.
struct ProjectiveModule {
  std::size_t base = 0;
  std::vector<std::vector<Path>> paths_at;
  RationalRepresentation rep;

  std::optional<std::size_t> index_of(const Path& p) const {
    const auto& list = paths_at.at(p.head);
    auto it = std::find(list.begin(), list.end(), p);
    if (it == list.end()) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
  }
};

inline ProjectiveModule projective_module(const GentleAlgebra& alg, std::size_t x) {
  if (x >= alg.vertex_count()) throw QuiverError("unknown vertex index " + std::to_string(x));
  ProjectiveModule pm;
  pm.base = x;
  pm.paths_at.assign(alg.vertex_count(), {});
  for (auto& p : alg.paths_from(x)) pm.paths_at[p.head].push_back(std::move(p));
  DimensionVector dims(alg.vertex_count(), 0);
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) dims[v] = static_cast<int>(pm.paths_at[v].size());
  pm.rep = zero_representation<Rational>(alg, dims);
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arr = alg.arrow(a);
    for (std::size_t c = 0; c < pm.paths_at[arr.tail].size(); ++c) {
      const Path& p = pm.paths_at[arr.tail][c];
      if (!p.arrows.empty() && alg.is_relation(p.arrows.back(), a)) continue;
      Path q = p;
      q.arrows.push_back(a);
      q.head = arr.head;
      pm.rep.maps[a](*pm.index_of(q), c) = 1;
    }
  }
  return pm;
}

/// Direct sum of projectives P_{x_1} + ... + P_{x_k}; basis at y lists the summands in order.
struct ProjectiveSum {
  std::vector<std::size_t> slots;
  std::vector<ProjectiveModule> summands;
  RationalRepresentation rep;
  std::vector<std::vector<std::size_t>> offset;  // offset[slot][vertex]

  std::size_t basis_index(std::size_t slot, const Path& p) const {
    auto i = summands.at(slot).index_of(p);
    if (!i) throw InvariantError("path is not a basis element of the projective");
    return offset[slot][p.head] + *i;
  }
};

inline ProjectiveSum projective_sum(const GentleAlgebra& alg, const std::vector<std::size_t>& slots) {
  ProjectiveSum ps;
  ps.slots = slots;
  std::vector<RationalRepresentation> reps;
  std::vector<std::size_t> running(alg.vertex_count(), 0);
  for (auto x : slots) {
    ps.summands.push_back(projective_module(alg, x));
    reps.push_back(ps.summands.back().rep);
    ps.offset.push_back(running);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v)
      running[v] += static_cast<std::size_t>(ps.summands.back().rep.dims[v]);
  }
  ps.rep = reps.empty() ? zero_representation<Rational>(alg, DimensionVector(alg.vertex_count(), 0))
                        : direct_sum(alg, reps);
  return ps;
}

// ---------------------------------------------------------------------------
// Presentations

/// coefficient * path, the path running from the P0 slot's vertex to the P1 slot's vertex.
struct PathTerm {
  MultiPoly coefficient;
  Path path;
};

/// P1 --F--> P0. Slots list base vertices; f[s][u] is the formal sum giving the
/// component of F from P1 slot s to P0 slot u.
struct ProjectivePresentation {
  std::vector<std::size_t> p1;
  std::vector<std::size_t> p0;
  std::vector<std::vector<std::vector<PathTerm>>> f;
  bool minimal = false;
};

namespace detail {

// rho followed by q, or nullopt if the concatenation hits the ideal.
inline std::optional<Path> concat(const GentleAlgebra& alg, const Path& rho, const Path& q) {
  if (rho.head != q.tail) throw InvariantError("paths are not composable");
  if (!rho.arrows.empty() && !q.arrows.empty() && alg.is_relation(rho.arrows.back(), q.arrows.front()))
    return std::nullopt;
  Path out{rho.tail, q.head, rho.arrows};
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

inline void add_term(std::vector<PathTerm>& terms, const MultiPoly& coeff, const Path& p) {
  for (auto& t : terms)
    if (t.path == p) {
      t.coefficient += coeff;
      return;
    }
  terms.push_back({coeff, p});
}

}  // namespace detail

/// True if no entry of F has a nonzero coefficient on a trivial path, i.e. im F lies in rad P0.
inline bool presentation_is_minimal(const ProjectivePresentation& pres) {
  for (const auto& row : pres.f)
    for (const auto& entry : row) {
      MultiPoly trivial;
      for (const auto& t : entry)
        if (t.path.is_trivial()) trivial += t.coefficient;
      if (!trivial.is_zero()) return false;
    }
  return true;
}

/// Components F_y : P1(y) -> P0(y) after substituting `values` into the coefficients.
inline std::vector<RationalMatrix> presentation_map(const GentleAlgebra& alg, const ProjectivePresentation& pres,
                                                    const Assignment& values) {
  ProjectiveSum p1 = projective_sum(alg, pres.p1);
  ProjectiveSum p0 = projective_sum(alg, pres.p0);
  std::vector<RationalMatrix> out;
  for (std::size_t y = 0; y < alg.vertex_count(); ++y)
    out.emplace_back(static_cast<std::size_t>(p0.rep.dims[y]), static_cast<std::size_t>(p1.rep.dims[y]));
  for (std::size_t s = 0; s < pres.p1.size(); ++s)
    for (std::size_t y = 0; y < alg.vertex_count(); ++y)
      for (const Path& q : p1.summands[s].paths_at[y]) {
        std::size_t col = p1.basis_index(s, q);
        for (std::size_t u = 0; u < pres.p0.size(); ++u)
          for (const auto& term : pres.f[s][u]) {
            auto path = detail::concat(alg, term.path, q);
            if (!path) continue;
            out[y](p0.basis_index(u, *path), col) += term.coefficient.evaluate(values);
          }
      }
  return out;
}

/// Generator of a module: a vector at a vertex.
struct Generator {
  std::size_t vertex;
  std::vector<Rational> vector;
};

/// Components pi_y : P0(y) -> M(y) sending the generator of slot g to gens[g].
inline std::vector<RationalMatrix> cover_map(const GentleAlgebra& alg, const RationalRepresentation& m,
                                             const ProjectiveSum& p0, const std::vector<Generator>& gens) {
  std::vector<RationalMatrix> out;
  for (std::size_t y = 0; y < alg.vertex_count(); ++y)
    out.emplace_back(static_cast<std::size_t>(m.dims[y]), static_cast<std::size_t>(p0.rep.dims[y]));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    RationalMatrix mg(gens[g].vector.size(), 1);
    for (std::size_t k = 0; k < gens[g].vector.size(); ++k) mg(k, 0) = gens[g].vector[k];
    for (std::size_t y = 0; y < alg.vertex_count(); ++y)
      for (const Path& p : p0.summands[g].paths_at[y]) {
        RationalMatrix img = path_matrix(m, p) * mg;
        std::size_t col = p0.basis_index(g, p);
        for (std::size_t r = 0; r < img.rows(); ++r) out[y](r, col) = img(r, 0);
      }
  }
  return out;
}

/// Vectors spanning a complement of rad M = sum of arrow images, as standard vectors,
/// ordered by vertex and then coordinate.
inline std::vector<Generator> top_generators(const GentleAlgebra& alg, const RationalRepresentation& m) {
  std::vector<Generator> out;
  for (std::size_t y = 0; y < alg.vertex_count(); ++y) {
    std::size_t dy = static_cast<std::size_t>(m.dims[y]);
    std::vector<RationalMatrix> images;
    for (auto a : alg.in_arrows(y)) images.push_back(m.maps[a]);
    RationalMatrix rad = hconcat(images, dy);
    for (auto k : complement_coordinates(rad)) {
      std::vector<Rational> v(dy, Rational(0));
      v[k] = 1;
      out.push_back({y, std::move(v)});
    }
  }
  return out;
}

/// Restriction of a representation to subspaces given by basis columns B_y (one per vertex)
/// that are stable under the arrow maps.
inline RationalRepresentation restrict_to(const GentleAlgebra& alg, const RationalRepresentation& m,
                                          const std::vector<RationalMatrix>& basis) {
  DimensionVector dims(alg.vertex_count(), 0);
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) dims[v] = static_cast<int>(basis[v].cols());
  auto out = zero_representation<Rational>(alg, dims);
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arr = alg.arrow(a);
    if (basis[arr.tail].cols() == 0 || basis[arr.head].cols() == 0) {
      if (basis[arr.tail].cols() > 0 && !(m.maps[a] * basis[arr.tail]).is_zero())
        throw InvariantError("subspace is not a subrepresentation");
      continue;
    }
    out.maps[a] = solve_full_column_rank(basis[arr.head], m.maps[a] * basis[arr.tail]);
  }
  return out;
}

/// Output of the cover-of-top construction for a module M.
struct MinimalPresentationData {
  ProjectivePresentation presentation;
  std::vector<Generator> generators;        // top of M, one per P0 slot
  ProjectiveSum p0;
  std::vector<RationalMatrix> kernel_basis;  // per vertex, columns in P0(y) coordinates
  RationalRepresentation kernel;             // K = ker(P0 -> M)
  long long p1_dimension = 0;                // total dimension of P1

  /// K is projective exactly when its projective cover P1 -> K is injective.
  bool projective_dimension_at_most_one() const { return p1_dimension == kernel.total_dimension(); }
};

inline MinimalPresentationData minimal_presentation_data(const GentleAlgebra& alg, const RationalRepresentation& m) {
  check_shapes(alg, m);
  MinimalPresentationData data;
  data.generators = top_generators(alg, m);
  std::vector<std::size_t> p0_slots;
  for (const auto& g : data.generators) p0_slots.push_back(g.vertex);
  data.p0 = projective_sum(alg, p0_slots);
  auto pi = cover_map(alg, m, data.p0, data.generators);
  for (std::size_t y = 0; y < alg.vertex_count(); ++y) {
    if (rank(pi[y]) != static_cast<std::size_t>(m.dims[y]))
      throw InvariantError("top generators do not generate the module");
    data.kernel_basis.push_back(kernel_basis(pi[y]));
  }
  data.kernel = restrict_to(alg, data.p0.rep, data.kernel_basis);

  auto kgens = top_generators(alg, data.kernel);
  ProjectivePresentation pres;
  pres.p0 = p0_slots;
  for (const auto& kg : kgens) pres.p1.push_back(kg.vertex);
  pres.f.assign(pres.p1.size(), std::vector<std::vector<PathTerm>>(pres.p0.size()));
  for (std::size_t s = 0; s < kgens.size(); ++s) {
    const std::size_t y = kgens[s].vertex;
    std::size_t k = static_cast<std::size_t>(
        std::find(kgens[s].vector.begin(), kgens[s].vector.end(), Rational(1)) - kgens[s].vector.begin());
    for (std::size_t u = 0; u < pres.p0.size(); ++u) {
      const auto& paths = data.p0.summands[u].paths_at[y];
      for (std::size_t i = 0; i < paths.size(); ++i) {
        Rational kappa = data.kernel_basis[y](data.p0.offset[u][y] + i, k);
        if (kappa != 0) detail::add_term(pres.f[s][u], MultiPoly(kappa), paths[i]);
      }
    }
    data.p1_dimension += projective_module(alg, y).rep.total_dimension();
  }
  pres.minimal = presentation_is_minimal(pres);
  data.presentation = std::move(pres);
  return data;
}

/// Minimal projective presentation of M via projective covers of M and of ker(P0 -> M).
inline ProjectivePresentation minimal_presentation(const GentleAlgebra& alg, const RationalRepresentation& m) {
  return minimal_presentation_data(alg, m).presentation;
}

/// dim Ext^1(M, N) = dim Hom(K, N) - dim Hom(P0, N) + dim Hom(M, N) for K = ker(P0 -> M).
inline long long ext1_dim(const GentleAlgebra& alg, const RationalRepresentation& m, const RationalRepresentation& n) {
  auto data = minimal_presentation_data(alg, m);
  long long hom_p0 = 0;
  for (auto x : data.presentation.p0) hom_p0 += n.dims[x];
  return static_cast<long long>(hom_dim(alg, data.kernel, n)) - hom_p0 + static_cast<long long>(hom_dim(alg, m, n));
}

inline bool has_projective_dimension_at_most_one(const GentleAlgebra& alg, const RationalRepresentation& m) {
  return minimal_presentation_data(alg, m).projective_dimension_at_most_one();
}

// ---------------------------------------------------------------------------
// Band presentation

namespace detail {

// Quiver path of the directed graph walk ending at `sink` whose last arrow enters
// with sign delta, traced back to a source. Returns (source id, path).
inline std::pair<std::size_t, Path> trace_to_source(const GentleAlgebra& alg, const UpDownData& data,
                                                    std::size_t sink, int delta) {
  const auto& g = data.graph;
  std::optional<std::size_t> first;
  for (auto f : g.incident(sink)) {
    const Arrow& arr = alg.arrow(g.arrows()[f].q_arrow);
    if (data.eps(arr.head, arr.color) == delta) first = f;
  }
  if (!first) throw InvariantError("sink without an incoming arrow of the requested sign");
  std::vector<std::size_t> rev;
  std::size_t at = sink, f = *first;
  for (std::size_t guard = 0; guard <= g.arrows().size(); ++guard) {
    rev.push_back(g.arrows()[f].q_arrow);
    at = g.arrows()[f].tail;
    if (g.is_source(at)) {
      Path p{g.vertices()[at].q_vertex, g.vertices()[sink].q_vertex, {rev.rbegin(), rev.rend()}};
      return {at, p};
    }
    std::optional<std::size_t> next;
    for (auto h : g.incident(at))
      if (h != f) next = h;
    if (!next || g.arrows()[*next].head != at) throw InvariantError("walk towards a source broke off");
    f = *next;
  }
  throw InvariantError("walk towards a source did not terminate");
}

}  // namespace detail

/// Presentation of the up-and-down module when every component of the graph is a band:
/// P0 over the graph's sources, P1 over its sinks, and for a sink v the column
/// [lambda_b l+(v); -l-(v)] (lambda_b only when v is the base point of band b).
inline ProjectivePresentation band_presentation(const GentleAlgebra& alg, const UpDownData& data,
                                                const std::vector<MultiPoly>& lambda) {
  for (const auto& c : data.components)
    if (c.kind != ComponentKind::Band) throw DomainError("band presentation needs a graph made of bands only");
  if (lambda.size() != data.bands.size()) throw DomainError("one band parameter per band is required");
  const auto& g = data.graph;
  std::vector<std::size_t> sources, sinks;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (g.is_source(v)) sources.push_back(v);
    if (g.is_sink(v)) sinks.push_back(v);
  }
  ProjectivePresentation pres;
  for (auto v : sinks) pres.p1.push_back(g.vertices()[v].q_vertex);
  for (auto v : sources) pres.p0.push_back(g.vertices()[v].q_vertex);
  pres.f.assign(sinks.size(), std::vector<std::vector<PathTerm>>(sources.size()));
  auto slot_of = [&](std::size_t src) {
    return static_cast<std::size_t>(std::find(sources.begin(), sources.end(), src) - sources.begin());
  };
  for (std::size_t s = 0; s < sinks.size(); ++s) {
    const std::size_t v = sinks[s];
    auto [plus_src, plus_path] = detail::trace_to_source(alg, data, v, 1);
    auto [minus_src, minus_path] = detail::trace_to_source(alg, data, v, -1);
    MultiPoly coeff(1);
    auto b = band_of(data, v);
    if (b && data.base_point[*b] == v) coeff = lambda[*b];
    detail::add_term(pres.f[s][slot_of(plus_src)], coeff, plus_path);
    detail::add_term(pres.f[s][slot_of(minus_src)], MultiPoly(-1), minus_path);
  }
  pres.minimal = presentation_is_minimal(pres);
  return pres;
}

/// Generators matching the band presentation: slot u maps to the basis vector of source u.
inline std::vector<Generator> band_generators(const UpDownData& data) {
  std::vector<Generator> out;
  const auto& g = data.graph;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (g.is_source(v)) {
      const auto& gv = g.vertices()[v];
      std::vector<Rational> vec(static_cast<std::size_t>(data.d[gv.q_vertex]), Rational(0));
      vec[static_cast<std::size_t>(gv.index - 1)] = 1;
      out.push_back({gv.q_vertex, std::move(vec)});
    }
  return out;
}

}  // namespace gentle
