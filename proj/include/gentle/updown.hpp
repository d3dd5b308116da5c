#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gentle/multipoly.hpp"
#include "gentle/quiver.hpp"
#include "gentle/rank.hpp"
#include "gentle/representation.hpp"

namespace gentle {

/// epsilon: (vertex, incident color) -> +1/-1, with opposite signs for the two
/// colors at a bichromatic vertex.
class SignFunction {
 public:
  /// +1 for the color whose name sorts first at each vertex, -1 for the other;
  /// +1 at vertices with a single color.
  static SignFunction default_for(const GentleAlgebra& alg) {
    SignFunction eps;
    eps.signs_.resize(alg.vertex_count());
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
      auto cs = alg.colors_at(v);
      std::sort(cs.begin(), cs.end(),
                [&](std::size_t x, std::size_t y) { return alg.color_name(x) < alg.color_name(y); });
      for (std::size_t k = 0; k < cs.size(); ++k) eps.signs_[v][cs[k]] = k == 0 ? 1 : -1;
    }
    return eps;
  }

  /// Starts from the default and applies explicit (vertex, color, sign) entries.
  /// When one color of a bichromatic vertex is set, the other gets the opposite sign.
  static SignFunction with_overrides(const GentleAlgebra& alg,
                                     const std::vector<std::tuple<std::size_t, std::size_t, int>>& entries) {
    SignFunction eps = default_for(alg);
    std::map<std::pair<std::size_t, std::size_t>, int> given;
    for (const auto& [v, s, sign] : entries) {
      if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
      const auto& cs = alg.colors_at(v);
      if (std::find(cs.begin(), cs.end(), s) == cs.end())
        throw DomainError("color '" + alg.color_name(s) + "' is not incident to vertex " + alg.vertex_name(v));
      auto [it, inserted] = given.emplace(std::make_pair(v, s), sign);
      if (!inserted && it->second != sign)
        throw DomainError("conflicting signs for (" + alg.vertex_name(v) + ", " + alg.color_name(s) + ")");
    }
    for (const auto& [key, sign] : given) {
      auto [v, s] = key;
      eps.signs_[v][s] = sign;
      for (auto other : alg.colors_at(v)) {
        if (other == s) continue;
        auto g = given.find({v, other});
        if (g != given.end() && g->second == sign)
          throw DomainError("signs at vertex " + alg.vertex_name(v) + " must differ between its two colors");
        eps.signs_[v][other] = -sign;
      }
    }
    return eps;
  }

  int operator()(std::size_t vertex, std::size_t color) const {
    auto it = signs_.at(vertex).find(color);
    if (it == signs_.at(vertex).end()) throw DomainError("sign requested for a color not incident to the vertex");
    return it->second;
  }

  std::vector<std::tuple<std::size_t, std::size_t, int>> entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, int>> out;
    for (std::size_t v = 0; v < signs_.size(); ++v)
      for (const auto& [s, sign] : signs_[v]) out.emplace_back(v, s, sign);
    return out;
  }

  friend bool operator==(const SignFunction&, const SignFunction&) = default;

 private:
  std::vector<std::map<std::size_t, int>> signs_;
};

/// Every sign function for the algebra (2^k of them for k bichromatic vertices).
inline std::vector<SignFunction> all_sign_functions(const GentleAlgebra& alg) {
  std::vector<std::size_t> bichromatic;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    if (alg.colors_at(v).size() == 2) bichromatic.push_back(v);
  std::vector<SignFunction> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << bichromatic.size()); ++mask) {
    std::vector<std::tuple<std::size_t, std::size_t, int>> entries;
    for (std::size_t k = 0; k < bichromatic.size(); ++k)
      entries.emplace_back(bichromatic[k], alg.colors_at(bichromatic[k])[0], (mask >> k) & 1 ? -1 : 1);
    out.push_back(SignFunction::with_overrides(alg, entries));
  }
  return out;
}

/// Vertex v_j^i of the up-and-down graph (j is 1-based).
struct GammaVertex {
  std::size_t q_vertex;
  int index;
};

/// Arrow f_j^a with its endpoints as graph vertex ids.
struct GammaArrow {
  std::size_t q_arrow;
  int index;
  std::size_t tail;
  std::size_t head;
};

/// Up-and-down graph. Vertex ids follow (quiver vertex in file order, j).
class UpDownGraph {
 public:
  UpDownGraph() = default;
  UpDownGraph(const DimensionVector& d, std::vector<GammaArrow> arrows) : arrows_(std::move(arrows)) {
    offset_.resize(d.size() + 1, 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      offset_[i + 1] = offset_[i] + static_cast<std::size_t>(d[i]);
      for (int j = 1; j <= d[i]; ++j) vertices_.push_back({i, j});
    }
    incident_.assign(vertices_.size(), {});
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      incident_[arrows_[f].tail].push_back(f);
      incident_[arrows_[f].head].push_back(f);
    }
  }

  const std::vector<GammaVertex>& vertices() const { return vertices_; }
  const std::vector<GammaArrow>& arrows() const { return arrows_; }
  std::size_t id(std::size_t q_vertex, int j) const { return offset_.at(q_vertex) + static_cast<std::size_t>(j - 1); }
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }

  bool is_sink(std::size_t v) const {
    const auto& inc = incident_.at(v);
    return !inc.empty() && std::all_of(inc.begin(), inc.end(), [&](std::size_t f) { return arrows_[f].head == v; });
  }
  bool is_source(std::size_t v) const {
    const auto& inc = incident_.at(v);
    return !inc.empty() && std::all_of(inc.begin(), inc.end(), [&](std::size_t f) { return arrows_[f].tail == v; });
  }

 private:
  std::vector<GammaVertex> vertices_;
  std::vector<GammaArrow> arrows_;
  std::vector<std::size_t> offset_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline UpDownGraph updown_graph(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r,
                                const SignFunction& eps) {
  auto check = is_rank_function(alg, d, r);
  if (!check) throw DomainError("invalid rank function: " + check.violations.front());
  std::vector<GammaArrow> arrows;
  UpDownGraph shape(d, {});
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow& arr = alg.arrow(a);
    for (int j = 1; j <= r[a]; ++j) {
      int tj = eps(arr.tail, arr.color) == 1 ? j : d[arr.tail] - j + 1;
      int hj = eps(arr.head, arr.color) == 1 ? d[arr.head] - j + 1 : j;
      arrows.push_back({a, j, shape.id(arr.tail, tj), shape.id(arr.head, hj)});
    }
  }
  UpDownGraph g(d, std::move(arrows));
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (g.incident(v).size() > 2) throw InvariantError("up-and-down graph vertex with more than two arrows");
  return g;
}

enum class ComponentKind { String, Band };

inline const char* to_string(ComponentKind k) { return k == ComponentKind::String ? "string" : "band"; }

/// Connected component of the up-and-down graph with its canonical word.
struct GraphComponent {
  ComponentKind kind = ComponentKind::String;
  std::vector<std::size_t> vertices;  // ascending ids
  std::vector<std::size_t> arrows;    // ascending ids
  DimensionVector dim;
  RankFunction rank;
  std::string word;
};

namespace detail {

// Walk word from `start` along the given sequence of arrows.
inline std::string walk_word(const GentleAlgebra& alg, const UpDownGraph& g, std::size_t start,
                             const std::vector<std::size_t>& steps) {
  std::string word;
  std::size_t at = start;
  for (auto f : steps) {
    const auto& arr = g.arrows()[f];
    bool forward = arr.tail == at;
    word += (word.empty() ? "" : " ") + alg.arrow(arr.q_arrow).name + (forward ? "" : "^-1");
    at = forward ? arr.head : arr.tail;
  }
  return word;
}

// Follows the chain/cycle from `start` leaving through `first`.
inline std::vector<std::size_t> trace(const UpDownGraph& g, std::size_t start, std::size_t first,
                                      std::size_t max_steps) {
  std::vector<std::size_t> steps;
  std::size_t at = start, f = first;
  while (steps.size() < max_steps) {
    steps.push_back(f);
    const auto& arr = g.arrows()[f];
    at = arr.tail == at ? arr.head : arr.tail;
    std::optional<std::size_t> next;
    for (auto h : g.incident(at))
      if (h != f) next = h;
    if (!next) break;
    f = *next;
  }
  return steps;
}

}  // namespace detail

/// Splits the graph into strings (chains) and bands (cycles), ordered by canonical word.
/// String words are the smaller of the two end-to-end readings; band words the smallest
/// reading over all rotations and both directions.
inline std::vector<GraphComponent> classify_components(const GentleAlgebra& alg, const UpDownGraph& g) {
  const std::size_t nv = g.vertices().size();
  std::vector<int> comp(nv, -1);
  std::vector<GraphComponent> out;
  for (std::size_t s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    GraphComponent c;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (auto f : g.incident(v)) {
        if (g.incident(v).size() > 2) throw InvariantError("vertex of degree > 2");
        std::size_t w = g.arrows()[f].tail == v ? g.arrows()[f].head : g.arrows()[f].tail;
        if (std::find(c.arrows.begin(), c.arrows.end(), f) == c.arrows.end()) c.arrows.push_back(f);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.arrows.begin(), c.arrows.end());
    c.kind = c.arrows.size() == c.vertices.size() ? ComponentKind::Band : ComponentKind::String;
    if (c.arrows.size() + 1 != c.vertices.size() && c.kind == ComponentKind::String)
      throw InvariantError("component is neither a chain nor a cycle");
    c.dim = DimensionVector(alg.vertex_count(), 0);
    c.rank = RankFunction(alg.arrow_count(), 0);
    for (auto v : c.vertices) ++c.dim[g.vertices()[v].q_vertex];
    for (auto f : c.arrows) ++c.rank[g.arrows()[f].q_arrow];

    if (c.kind == ComponentKind::String) {
      if (c.arrows.empty()) {
        c.word = "e_" + alg.vertex_name(g.vertices()[c.vertices.front()].q_vertex);
      } else {
        std::vector<std::string> readings;
        for (auto v : c.vertices)
          if (g.incident(v).size() == 1) {
            auto steps = detail::trace(g, v, g.incident(v).front(), c.arrows.size());
            readings.push_back(detail::walk_word(alg, g, v, steps));
          }
        c.word = *std::min_element(readings.begin(), readings.end());
      }
    } else {
      std::string best;
      for (auto v : c.vertices)
        for (auto f : g.incident(v)) {
          auto steps = detail::trace(g, v, f, c.arrows.size());
          auto w = detail::walk_word(alg, g, v, steps);
          if (best.empty() || w < best) best = w;
        }
      c.word = best;
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const GraphComponent& a, const GraphComponent& b) {
    return std::tie(a.word, a.kind, a.vertices) < std::tie(b.word, b.kind, b.vertices);
  });
  return out;
}

/// One summand type of the generic decomposition.
struct DecompositionEntry {
  ComponentKind kind;
  std::string word;
  DimensionVector dim;
  RankFunction rank;
  int multiplicity;
  std::vector<std::size_t> components;  // indices into the classified component list
};

struct GenericDecomposition {
  std::vector<DecompositionEntry> entries;
  std::vector<std::string> warnings;
  bool rank_is_maximal = false;

  /// Sum of multiplicities of band entries.
  int transcendence_degree() const {
    int n = 0;
    for (const auto& e : entries)
      if (e.kind == ComponentKind::Band) n += e.multiplicity;
    return n;
  }

  std::vector<std::size_t> band_entries() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].kind == ComponentKind::Band) out.push_back(i);
    return out;
  }

  bool all_bands() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const DecompositionEntry& e) { return e.kind == ComponentKind::Band; });
  }
};

/// Groups components with equal canonical word. Bands that share (dim, rank) but not
/// the word stay separate and are reported in `warnings`.
inline GenericDecomposition group_components(const std::vector<GraphComponent>& comps) {
  GenericDecomposition dec;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    auto it = std::find_if(dec.entries.begin(), dec.entries.end(),
                           [&](const DecompositionEntry& e) { return e.kind == c.kind && e.word == c.word; });
    if (it != dec.entries.end()) {
      if (it->dim != c.dim || it->rank != c.rank)
        throw InvariantError("components with equal word differ in dimension or rank");
      ++it->multiplicity;
      it->components.push_back(k);
    } else {
      dec.entries.push_back({c.kind, c.word, c.dim, c.rank, 1, {k}});
    }
  }
  for (std::size_t i = 0; i < dec.entries.size(); ++i)
    for (std::size_t j = i + 1; j < dec.entries.size(); ++j) {
      const auto& a = dec.entries[i];
      const auto& b = dec.entries[j];
      if (a.kind == b.kind && a.dim == b.dim && a.rank == b.rank)
        dec.warnings.push_back(std::string(to_string(a.kind)) + " components '" + a.word + "' and '" + b.word +
                               "' share dimension and rank vectors but have different words");
    }
  return dec;
}

/// Generic decomposition of mod(A, d, r) read off the up-and-down graph.
inline GenericDecomposition generic_decomposition(const GentleAlgebra& alg, const DimensionVector& d,
                                                  const RankFunction& r, const SignFunction& eps) {
  auto comps = classify_components(alg, updown_graph(alg, d, r, eps));
  auto dec = group_components(comps);
  dec.rank_is_maximal = is_maximal_rank_function(alg, d, r);
  return dec;
}

inline GenericDecomposition generic_decomposition(const GentleAlgebra& alg, const DimensionVector& d,
                                                  const RankFunction& r) {
  return generic_decomposition(alg, d, r, SignFunction::default_for(alg));
}

/// Number of band components of the up-and-down graph, i.e. the transcendence degree
/// of the field of rational invariants on mod(A, d, r).
inline int transcendence_degree(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  return generic_decomposition(alg, d, r).transcendence_degree();
}

/// Everything needed to write down up-and-down modules for fixed (d, r, eps).
struct UpDownData {
  DimensionVector d;
  RankFunction r;
  SignFunction eps;
  UpDownGraph graph;
  std::vector<GraphComponent> components;
  std::vector<std::size_t> bands;       // indices into components, in component order
  std::vector<std::size_t> base_point;  // per band: the chosen sink Theta(b)
  std::vector<int> component_of;       // graph vertex -> component index

  std::size_t band_count() const { return bands.size(); }
  /// Label used for the band parameter of the k-th band: "b1", "b2", ...
  static std::string band_label(std::size_t k) { return "b" + std::to_string(k + 1); }
};

/// Smallest sink (by vertex id) on each band.
inline std::vector<std::size_t> canonical_base_points(const UpDownGraph& g, const std::vector<GraphComponent>& comps,
                                                      const std::vector<std::size_t>& bands) {
  std::vector<std::size_t> out;
  for (auto b : bands) {
    auto it = std::find_if(comps[b].vertices.begin(), comps[b].vertices.end(),
                           [&](std::size_t v) { return g.is_sink(v); });
    if (it == comps[b].vertices.end()) throw InvariantError("band without a sink");
    out.push_back(*it);
  }
  return out;
}

/// Builds the graph, its components and canonical base points. `base_override`, if
/// given, must name one sink on each band (in band order).
inline UpDownData updown_data(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r,
                              const SignFunction& eps,
                              const std::optional<std::vector<std::size_t>>& base_override = std::nullopt) {
  UpDownData data{d, r, eps, updown_graph(alg, d, r, eps), {}, {}, {}, {}};
  data.components = classify_components(alg, data.graph);
  data.component_of.assign(data.graph.vertices().size(), -1);
  for (std::size_t k = 0; k < data.components.size(); ++k) {
    for (auto v : data.components[k].vertices) data.component_of[v] = static_cast<int>(k);
    if (data.components[k].kind == ComponentKind::Band) data.bands.push_back(k);
  }
  if (base_override) {
    if (base_override->size() != data.bands.size()) throw DomainError("one base point per band is required");
    for (std::size_t k = 0; k < data.bands.size(); ++k) {
      std::size_t v = (*base_override)[k];
      if (v >= data.graph.vertices().size() || data.component_of[v] != static_cast<int>(data.bands[k]))
        throw DomainError("base point of band " + UpDownData::band_label(k) + " does not lie on it");
      if (!data.graph.is_sink(v)) throw DomainError("base point of band " + UpDownData::band_label(k) + " is not a sink");
    }
    data.base_point = *base_override;
  } else {
    data.base_point = canonical_base_points(data.graph, data.components, data.bands);
  }
  return data;
}

inline UpDownData updown_data(const GentleAlgebra& alg, const DimensionVector& d, const RankFunction& r) {
  return updown_data(alg, d, r, SignFunction::default_for(alg));
}

/// Index of the band containing graph vertex v, if any.
inline std::optional<std::size_t> band_of(const UpDownData& data, std::size_t v) {
  int c = data.component_of.at(v);
  auto it = std::find(data.bands.begin(), data.bands.end(), static_cast<std::size_t>(c));
  if (it == data.bands.end()) return std::nullopt;
  return static_cast<std::size_t>(it - data.bands.begin());
}

/// The up-and-down module: basis v_1^i..v_{d(i)}^i at vertex i; f_j^a acts by lambda_b
/// when it ends at Theta(b) with sign -1 there, and by 1 otherwise.
inline SymbolicRepresentation updown_module(const GentleAlgebra& alg, const UpDownData& data,
                                            const std::vector<MultiPoly>& lambda) {
  if (lambda.size() != data.bands.size())
    throw DomainError("expected " + std::to_string(data.bands.size()) + " band parameter(s), got " +
                      std::to_string(lambda.size()));
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k].is_zero()) throw DomainError("band parameter for " + UpDownData::band_label(k) + " is zero");
  auto rep = zero_representation<MultiPoly>(alg, data.d);
  for (const auto& f : data.graph.arrows()) {
    const Arrow& arr = alg.arrow(f.q_arrow);
    const auto& hv = data.graph.vertices()[f.head];
    const auto& tv = data.graph.vertices()[f.tail];
    MultiPoly value(1);
    if (auto b = band_of(data, f.head); b && data.base_point[*b] == f.head && data.eps(arr.head, arr.color) == -1)
      value = lambda[*b];
    rep.maps[f.q_arrow](static_cast<std::size_t>(hv.index - 1), static_cast<std::size_t>(tv.index - 1)) = value;
  }
  return rep;
}

/// Band parameters as fresh variables named prefix + label ("lambda_b1", ...).
inline std::vector<MultiPoly> band_variables(const UpDownData& data, const std::string& prefix) {
  std::vector<MultiPoly> out;
  for (std::size_t k = 0; k < data.bands.size(); ++k) out.push_back(MultiPoly::variable(prefix + UpDownData::band_label(k)));
  return out;
}

inline std::vector<MultiPoly> band_values(const std::vector<Rational>& values) {
  return {values.begin(), values.end()};
}

}  // namespace gentle
