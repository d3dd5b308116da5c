#pragma once

#include <algorithm>
#include <cstddef>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gentle/error.hpp"

namespace gentle {

/// Integer vector indexed by vertices or arrows, tagged so the kinds do not mix.
template <class Tag>
class IndexVector {
 public:
  IndexVector() = default;
  explicit IndexVector(std::size_t n, int fill = 0) : values_(n, fill) {}
  explicit IndexVector(std::vector<int> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }
  int& operator[](std::size_t i) { return values_.at(i); }
  const std::vector<int>& values() const { return values_; }

  long long sum() const {
    long long s = 0;
    for (int v : values_) s += v;
    return s;
  }
  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
  }

  friend IndexVector operator+(IndexVector a, const IndexVector& b) {
    if (a.size() != b.size()) throw DimensionError("index vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.values_[i] += b.values_[i];
    return a;
  }
  friend IndexVector operator*(int k, IndexVector a) {
    for (auto& v : a.values_) v *= k;
    return a;
  }
  friend auto operator<=>(const IndexVector&, const IndexVector&) = default;

 private:
  std::vector<int> values_;
};

struct DimensionTag;
struct WeightTag;
struct RankTag;
/// Vertex-indexed nonnegative dimensions.
using DimensionVector = IndexVector<DimensionTag>;
/// Vertex-indexed integral weight.
using Weight = IndexVector<WeightTag>;
/// Arrow-indexed rank bounds.
using RankFunction = IndexVector<RankTag>;

struct Arrow {
  std::string name;
  std::size_t tail = 0;
  std::size_t head = 0;
  std::size_t color = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Path in traversal order: arrows[0] leaves `tail`, arrows[k+1] starts where arrows[k] ends.
/// The empty path at a vertex has tail == head and no arrows.
struct Path {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Raw contents of a quiver file before validation.
struct QuiverDeclaration {
  struct ArrowDecl {
    std::string name, tail, head, color;
  };
  std::string name = "unnamed";
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  /// Pairs (first, second) meaning "second after first" lies in the ideal.
  std::vector<std::pair<std::string, std::string>> relations;
  bool explicit_relations = false;
};

/// Quiver with a coloring of its arrows.
struct ColoredQuiver {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::string> colors;  // order of first appearance
  friend bool operator==(const ColoredQuiver&, const ColoredQuiver&) = default;
};

/// Acyclic gentle algebra kQ/I_c given by a colored quiver. Immutable once built;
/// construction checks acyclicity, that every color class is a directed path,
/// and the gentle axioms.
class GentleAlgebra {
 public:
  static GentleAlgebra build(const QuiverDeclaration& decl);

  const ColoredQuiver& quiver() const { return quiver_; }
  const std::string& name() const { return quiver_.name; }
  std::size_t vertex_count() const { return quiver_.vertices.size(); }
  std::size_t arrow_count() const { return quiver_.arrows.size(); }
  std::size_t color_count() const { return quiver_.colors.size(); }
  const std::string& vertex_name(std::size_t v) const { return quiver_.vertices.at(v); }
  const Arrow& arrow(std::size_t a) const { return quiver_.arrows.at(a); }
  const std::string& color_name(std::size_t s) const { return quiver_.colors.at(s); }

  /// Arrows of color s in path order.
  const std::vector<std::size_t>& color_path(std::size_t s) const { return color_paths_.at(s); }
  /// Vertices i_0, ..., i_n visited by the color path of s.
  std::vector<std::size_t> color_path_vertices(std::size_t s) const {
    const auto& path = color_paths_.at(s);
    std::vector<std::size_t> out{quiver_.arrows[path.front()].tail};
    for (auto a : path) out.push_back(quiver_.arrows[a].head);
    return out;
  }

  /// Colors of the arrows incident to v, ascending by color index.
  const std::vector<std::size_t>& colors_at(std::size_t v) const { return colors_at_.at(v); }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_.at(v); }
  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_.at(v); }

  std::size_t vertex_index(std::string_view name) const {
    for (std::size_t v = 0; v < quiver_.vertices.size(); ++v)
      if (quiver_.vertices[v] == name) return v;
    throw QuiverError("unknown vertex '" + std::string(name) + "'");
  }
  std::size_t arrow_index(std::string_view name) const {
    for (std::size_t a = 0; a < quiver_.arrows.size(); ++a)
      if (quiver_.arrows[a].name == name) return a;
    throw QuiverError("unknown arrow '" + std::string(name) + "'");
  }
  std::size_t color_index(std::string_view name) const {
    for (std::size_t s = 0; s < quiver_.colors.size(); ++s)
      if (quiver_.colors[s] == name) return s;
    throw QuiverError("unknown color '" + std::string(name) + "'");
  }

  /// True if traversing `first` then `second` is a generator of the ideal.
  bool is_relation(std::size_t first, std::size_t second) const {
    const Arrow& a = quiver_.arrows[first];
    const Arrow& b = quiver_.arrows[second];
    return a.head == b.tail && a.color == b.color;
  }

  bool avoids_relations(const Path& p) const {
    for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k)
      if (is_relation(p.arrows[k], p.arrows[k + 1])) return false;
    return true;
  }

  /// All paths starting at x that avoid the ideal, including the empty one.
  /// Ordered by length, then by arrow indices.
  std::vector<Path> paths_from(std::size_t x) const {
    std::vector<Path> out{Path{x, x, {}}};
    for (std::size_t k = 0; k < out.size(); ++k) {
      const Path p = out[k];
      for (auto a : out_[p.head]) {
        if (!p.arrows.empty() && is_relation(p.arrows.back(), a)) continue;
        Path q = p;
        q.arrows.push_back(a);
        q.head = quiver_.arrows[a].head;
        out.push_back(std::move(q));
      }
    }
    return out;
  }

  const std::vector<std::size_t>& topological_order() const { return topo_; }

  bool declared_explicit_relations() const { return explicit_relations_; }

  friend bool operator==(const GentleAlgebra& a, const GentleAlgebra& b) {
    return a.quiver_ == b.quiver_ && a.color_paths_ == b.color_paths_;
  }

 private:
  ColoredQuiver quiver_;
  std::vector<std::vector<std::size_t>> color_paths_;
  std::vector<std::vector<std::size_t>> colors_at_;
  std::vector<std::vector<std::size_t>> in_, out_;
  std::vector<std::size_t> topo_;
  bool explicit_relations_ = false;
};

namespace detail {

// Kahn's algorithm; returns nullopt on an oriented cycle.
inline std::optional<std::vector<std::size_t>> topological_sort(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows) ++indeg[a.head];
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick == n) return std::nullopt;
    done[pick] = true;
    order.push_back(pick);
    for (const auto& a : arrows)
      if (a.tail == pick) --indeg[a.head];
  }
  return order;
}

// Checks gentle axioms (1)-(3) for the ideal generated by the given length-2 relations.
// Axiom (4) holds by construction since only length-2 generators are representable.
template <class IsRelation>
void check_gentle_axioms(const ColoredQuiver& q, IsRelation&& in_ideal) {
  const std::size_t n = q.vertices.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t in = 0, out = 0;
    for (const auto& a : q.arrows) {
      in += a.head == v;
      out += a.tail == v;
    }
    if (in > 2 || out > 2)
      throw GentleAxiomError(1, q.vertices[v],
                             std::to_string(in) + " incoming and " + std::to_string(out) + " outgoing arrows");
  }
  auto names = [&](const std::vector<std::size_t>& arrows) {
    std::string s;
    for (auto a : arrows) s += (s.empty() ? "" : ", ") + q.arrows[a].name;
    return s;
  };
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& arr = q.arrows[b];
    std::vector<std::size_t> next_free, next_rel, prev_free, prev_rel;
    for (std::size_t c = 0; c < q.arrows.size(); ++c) {
      if (q.arrows[c].tail == arr.head) (in_ideal(b, c) ? next_rel : next_free).push_back(c);
      if (q.arrows[c].head == arr.tail) (in_ideal(c, b) ? prev_rel : prev_free).push_back(c);
    }
    if (next_free.size() > 1)
      throw GentleAxiomError(2, q.vertices[arr.head],
                             "arrows " + names(next_free) + " all compose with " + arr.name + " outside the ideal");
    if (prev_free.size() > 1)
      throw GentleAxiomError(2, q.vertices[arr.tail],
                             "arrows " + names(prev_free) + " all compose with " + arr.name + " outside the ideal");
    if (next_rel.size() > 1)
      throw GentleAxiomError(3, q.vertices[arr.head],
                             "arrows " + names(next_rel) + " all compose with " + arr.name + " into the ideal");
    if (prev_rel.size() > 1)
      throw GentleAxiomError(3, q.vertices[arr.tail],
                             "arrows " + names(prev_rel) + " all compose with " + arr.name + " into the ideal");
  }
}

}  // namespace detail

inline GentleAlgebra GentleAlgebra::build(const QuiverDeclaration& decl) {
  GentleAlgebra alg;
  ColoredQuiver& q = alg.quiver_;
  q.name = decl.name;
  std::map<std::string, std::size_t> vidx, aidx, cidx;
  for (const auto& v : decl.vertices) {
    if (vidx.count(v)) throw QuiverError("duplicate vertex '" + v + "'");
    vidx[v] = q.vertices.size();
    q.vertices.push_back(v);
  }
  for (const auto& ad : decl.arrows) {
    if (aidx.count(ad.name)) throw QuiverError("duplicate arrow '" + ad.name + "'");
    auto t = vidx.find(ad.tail), h = vidx.find(ad.head);
    if (t == vidx.end()) throw QuiverError("arrow '" + ad.name + "' has unknown tail '" + ad.tail + "'");
    if (h == vidx.end()) throw QuiverError("arrow '" + ad.name + "' has unknown head '" + ad.head + "'");
    if (!cidx.count(ad.color)) {
      cidx[ad.color] = q.colors.size();
      q.colors.push_back(ad.color);
    }
    aidx[ad.name] = q.arrows.size();
    q.arrows.push_back(Arrow{ad.name, t->second, h->second, cidx[ad.color]});
  }
  const std::size_t n = q.vertices.size();

  auto topo = detail::topological_sort(n, q.arrows);
  if (!topo) throw QuiverError("quiver '" + q.name + "' has an oriented cycle");
  alg.topo_ = *topo;

  if (decl.explicit_relations) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& [first, second] : decl.relations) {
      auto a = aidx.find(first), b = aidx.find(second);
      if (a == aidx.end() || b == aidx.end())
        throw QuiverError("relation names unknown arrow '" + (a == aidx.end() ? first : second) + "'");
      if (q.arrows[a->second].head != q.arrows[b->second].tail)
        throw QuiverError("relation " + first + " " + second + " is not a composable pair");
      rel.emplace_back(a->second, b->second);
    }
    detail::check_gentle_axioms(q, [&](std::size_t x, std::size_t y) {
      return std::find(rel.begin(), rel.end(), std::make_pair(x, y)) != rel.end();
    });
  }

  // Each color class must be one directed path.
  alg.color_paths_.assign(q.colors.size(), {});
  for (std::size_t s = 0; s < q.colors.size(); ++s) {
    std::vector<std::size_t> cls;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].color == s) cls.push_back(a);
    std::optional<std::size_t> start;
    for (auto a : cls) {
      std::size_t preds = 0;
      for (auto b : cls) preds += q.arrows[b].head == q.arrows[a].tail;
      std::size_t succs = 0;
      for (auto b : cls) succs += q.arrows[b].tail == q.arrows[a].head;
      if (preds > 1 || succs > 1)
        throw QuiverError("color '" + q.colors[s] + "' branches at arrow '" + q.arrows[a].name +
                          "' and is not a directed path");
      if (preds == 0) {
        if (start) throw QuiverError("color '" + q.colors[s] + "' is not a single directed path");
        start = a;
      }
    }
    if (!start) throw QuiverError("color '" + q.colors[s] + "' is not a single directed path");
    std::vector<std::size_t> path{*start};
    while (path.size() < cls.size()) {
      std::size_t cur = path.back();
      auto next = std::find_if(cls.begin(), cls.end(),
                               [&](std::size_t b) { return q.arrows[b].tail == q.arrows[cur].head; });
      if (next == cls.end()) break;
      path.push_back(*next);
    }
    if (path.size() != cls.size()) throw QuiverError("color '" + q.colors[s] + "' is not a single directed path");
    alg.color_paths_[s] = std::move(path);
  }

  auto in_ic = [&](std::size_t x, std::size_t y) {
    return q.arrows[x].head == q.arrows[y].tail && q.arrows[x].color == q.arrows[y].color;
  };
  if (decl.explicit_relations) {
    std::vector<std::pair<std::string, std::string>> expected;
    for (std::size_t x = 0; x < q.arrows.size(); ++x)
      for (std::size_t y = 0; y < q.arrows.size(); ++y)
        if (in_ic(x, y)) expected.emplace_back(q.arrows[x].name, q.arrows[y].name);
    auto given = decl.relations;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != expected) throw QuiverError("declared relations differ from the monochromatic pairs of the coloring");
  } else {
    detail::check_gentle_axioms(q, in_ic);
  }
  alg.explicit_relations_ = decl.explicit_relations;

  alg.in_.assign(n, {});
  alg.out_.assign(n, {});
  alg.colors_at_.assign(n, {});
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    alg.out_[q.arrows[a].tail].push_back(a);
    alg.in_[q.arrows[a].head].push_back(a);
    for (auto v : {q.arrows[a].tail, q.arrows[a].head}) {
      auto& cs = alg.colors_at_[v];
      if (std::find(cs.begin(), cs.end(), q.arrows[a].color) == cs.end()) cs.push_back(q.arrows[a].color);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(alg.colors_at_[v].begin(), alg.colors_at_[v].end());
    if (alg.colors_at_[v].size() > 2)
      throw InvariantError("vertex '" + q.vertices[v] + "' meets more than two colors");
  }
  return alg;
}

/// Parses the line-oriented quiver format:
///   quiver <name>
///   vertex <id>
///   arrow <name> <tail-id> <head-id> <color>
///   relation <first-arrow> <second-arrow>     (optional; see README)
/// '#' starts a comment.
inline GentleAlgebra parse_quiver(std::string_view text) {
  QuiverDeclaration decl;
  std::map<std::string, bool> vertices, arrows;
  bool saw_name = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    struct Token {
      std::string text;
      std::size_t column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      tokens.push_back({std::string(line.substr(i, j - i)), i + 1});
      i = j;
    }
    pos = end + 1;
    if (tokens.empty()) continue;

    const std::string& kw = tokens[0].text;
    auto expect = [&](std::size_t count) {
      if (tokens.size() != count)
        throw ParseError(line_no, tokens[0].column,
                         "'" + kw + "' expects " + std::to_string(count - 1) + " argument(s), got " +
                             std::to_string(tokens.size() - 1));
    };
    if (kw == "quiver") {
      expect(2);
      if (saw_name) throw ParseError(line_no, tokens[0].column, "duplicate 'quiver' declaration");
      saw_name = true;
      decl.name = tokens[1].text;
    } else if (kw == "vertex") {
      expect(2);
      if (vertices.count(tokens[1].text))
        throw ParseError(line_no, tokens[1].column, "duplicate vertex '" + tokens[1].text + "'");
      vertices[tokens[1].text] = true;
      decl.vertices.push_back(tokens[1].text);
    } else if (kw == "arrow") {
      expect(5);
      if (arrows.count(tokens[1].text))
        throw ParseError(line_no, tokens[1].column, "duplicate arrow '" + tokens[1].text + "'");
      for (std::size_t k : {2u, 3u})
        if (!vertices.count(tokens[k].text))
          throw ParseError(line_no, tokens[k].column, "undeclared vertex '" + tokens[k].text + "'");
      arrows[tokens[1].text] = true;
      decl.arrows.push_back({tokens[1].text, tokens[2].text, tokens[3].text, tokens[4].text});
    } else if (kw == "relation") {
      expect(3);
      for (std::size_t k : {1u, 2u})
        if (!arrows.count(tokens[k].text))
          throw ParseError(line_no, tokens[k].column, "undeclared arrow '" + tokens[k].text + "'");
      decl.explicit_relations = true;
      decl.relations.emplace_back(tokens[1].text, tokens[2].text);
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown declaration '" + kw + "'");
    }
  }
  return GentleAlgebra::build(decl);
}

inline std::string print_quiver(const GentleAlgebra& alg) {
  std::ostringstream out;
  const auto& q = alg.quiver();
  out << "quiver " << q.name << "\n";
  for (const auto& v : q.vertices) out << "vertex " << v << "\n";
  for (const auto& a : q.arrows)
    out << "arrow " << a.name << " " << q.vertices[a.tail] << " " << q.vertices[a.head] << " " << q.colors[a.color]
        << "\n";
  if (alg.declared_explicit_relations())
    for (std::size_t s = 0; s < alg.color_count(); ++s) {
      const auto& p = alg.color_path(s);
      for (std::size_t k = 0; k + 1 < p.size(); ++k)
        out << "relation " << q.arrows[p[k]].name << " " << q.arrows[p[k + 1]].name << "\n";
    }
  return out.str();
}

/// Generators (first, second) of I_c, ordered by color and then along each color path.
inline std::vector<std::pair<std::size_t, std::size_t>> relation_pairs(const GentleAlgebra& alg) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < alg.color_count(); ++s) {
    const auto& p = alg.color_path(s);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) out.emplace_back(p[k], p[k + 1]);
  }
  return out;
}

/// ext[l][i][j] = dim Ext^l(S_i, S_j): the number of arrow chains of length l from i to j
/// in which every consecutive pair is a relation.
inline std::vector<std::vector<std::vector<long long>>> simple_ext_dimensions(const GentleAlgebra& alg) {
  const std::size_t n = alg.vertex_count(), m = alg.arrow_count();
  std::vector<std::vector<std::vector<long long>>> ext;
  std::vector<std::vector<long long>> id(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  ext.push_back(id);
  // ending[i][a]: number of chains from i whose last arrow is a.
  std::vector<std::vector<long long>> ending(n, std::vector<long long>(m, 0));
  for (std::size_t a = 0; a < m; ++a) ending[alg.arrow(a).tail][a] = 1;
  while (true) {
    std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < m; ++a)
        if (ending[i][a]) {
          e[i][alg.arrow(a).head] += ending[i][a];
          any = true;
        }
    if (!any) break;
    ext.push_back(e);
    std::vector<std::vector<long long>> next(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < m; ++a)
        if (ending[i][a])
          for (std::size_t b = 0; b < m; ++b)
            if (alg.is_relation(a, b)) next[i][b] += ending[i][a];
    ending = std::move(next);
  }
  return ext;
}

/// Euler form <<d, e>> = sum_l (-1)^l sum_{i,j} dim Ext^l(S_i, S_j) d(i) e(j).
inline long long euler_form(const GentleAlgebra& alg, const DimensionVector& d, const DimensionVector& e) {
  if (d.size() != alg.vertex_count() || e.size() != alg.vertex_count())
    throw DimensionError("dimension vector length does not match the quiver");
  auto ext = simple_ext_dimensions(alg);
  long long total = 0;
  for (std::size_t l = 0; l < ext.size(); ++l) {
    long long part = 0;
    for (std::size_t i = 0; i < alg.vertex_count(); ++i)
      for (std::size_t j = 0; j < alg.vertex_count(); ++j) part += ext[l][i][j] * d[i] * e[j];
    total += (l % 2 == 0) ? part : -part;
  }
  return total;
}

inline long long weight_pairing(const Weight& theta, const DimensionVector& d) {
  if (theta.size() != d.size()) throw DimensionError("weight and dimension vector lengths differ");
  long long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long long>(theta[i]) * d[i];
  return s;
}

inline std::string path_to_string(const GentleAlgebra& alg, const Path& p) {
  if (p.is_trivial()) return "e_" + alg.vertex_name(p.tail);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += (s.empty() ? "" : "*") + alg.arrow(*it).name;
  return s;
}

}  // namespace gentle
