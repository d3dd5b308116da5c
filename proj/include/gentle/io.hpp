#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gentle/quiver.hpp"
#include "gentle/rational.hpp"

namespace gentle {

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

inline int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DomainError("invalid integer '" + text + "' for " + what);
  }
}

// "name=value,..." with every name resolved by `index`, or a bare list of `n` values.
template <class Index>
std::vector<std::string> parse_assignments(std::string_view text, std::size_t n, Index index, const std::string& what) {
  std::vector<std::string> out(n, "0");
  if (text.empty()) return out;
  auto parts = split(text, ',');
  bool named = parts.front().find('=') != std::string::npos;
  if (!named) {
    if (parts.size() != n)
      throw DomainError(what + " needs " + std::to_string(n) + " values, got " + std::to_string(parts.size()));
    return parts;
  }
  std::vector<bool> seen(n, false);
  for (const auto& part : parts) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw DomainError("expected name=value in " + what + ", got '" + part + "'");
    std::size_t i = index(part.substr(0, eq));
    if (seen[i]) throw DomainError("'" + part.substr(0, eq) + "' given twice in " + what);
    seen[i] = true;
    out[i] = part.substr(eq + 1);
  }
  return out;
}

}  // namespace detail

/// "v=3,w=4" (unlisted vertices get 0) or "3,4,..." in vertex order.
inline DimensionVector parse_dimension_vector(const GentleAlgebra& alg, std::string_view text) {
  auto raw = detail::parse_assignments(
      text, alg.vertex_count(), [&](const std::string& n) { return alg.vertex_index(n); }, "dimension vector");
  DimensionVector d(alg.vertex_count(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    d[i] = detail::parse_int(raw[i], "dimension at " + alg.vertex_name(i));
    if (d[i] < 0) throw DomainError("negative dimension at vertex " + alg.vertex_name(i));
  }
  return d;
}

/// "a=2,b=1" (unlisted arrows get 0) or a list in arrow order.
inline RankFunction parse_rank_function(const GentleAlgebra& alg, std::string_view text) {
  auto raw = detail::parse_assignments(
      text, alg.arrow_count(), [&](const std::string& n) { return alg.arrow_index(n); }, "rank function");
  RankFunction r(alg.arrow_count(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    r[i] = detail::parse_int(raw[i], "rank of " + alg.arrow(i).name);
    if (r[i] < 0) throw DomainError("negative rank on arrow " + alg.arrow(i).name);
  }
  return r;
}

inline Weight parse_weight(const GentleAlgebra& alg, std::string_view text) {
  auto raw = detail::parse_assignments(
      text, alg.vertex_count(), [&](const std::string& n) { return alg.vertex_index(n); }, "weight");
  Weight w(alg.vertex_count(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) w[i] = detail::parse_int(raw[i], "weight at " + alg.vertex_name(i));
  return w;
}

/// "b1=2/3,b2=5" -> label -> value. Labels are not checked here.
inline std::map<std::string, Rational> parse_parameters(std::string_view text) {
  std::map<std::string, Rational> out;
  if (text.empty()) return out;
  for (const auto& part : detail::split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw DomainError("expected label=value, got '" + part + "'");
    auto [it, inserted] = out.emplace(part.substr(0, eq), parse_rational(part.substr(eq + 1)));
    if (!inserted) throw DomainError("parameter '" + part.substr(0, eq) + "' given twice");
  }
  return out;
}

/// "vertex:color=+1,vertex:color=-1" -> (vertex, color, sign) triples.
inline std::vector<std::tuple<std::size_t, std::size_t, int>> parse_signs(const GentleAlgebra& alg,
                                                                          std::string_view text) {
  std::vector<std::tuple<std::size_t, std::size_t, int>> out;
  if (text.empty()) return out;
  for (const auto& part : detail::split(text, ',')) {
    auto colon = part.find(':');
    auto eq = part.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw DomainError("expected vertex:color=+1 or vertex:color=-1, got '" + part + "'");
    std::string sign = part.substr(eq + 1);
    int value = sign == "+1" || sign == "1" || sign == "+" ? 1 : sign == "-1" || sign == "-" ? -1 : 0;
    if (value == 0) throw DomainError("sign must be +1 or -1, got '" + sign + "'");
    out.emplace_back(alg.vertex_index(part.substr(0, colon)), alg.color_index(part.substr(colon + 1, eq - colon - 1)),
                     value);
  }
  return out;
}

inline std::string format_vector(const GentleAlgebra& alg, const DimensionVector& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + alg.vertex_name(i) + "=" + std::to_string(d[i]);
  return s;
}

inline std::string format_vector(const GentleAlgebra& alg, const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + alg.vertex_name(i) + "=" + std::to_string(w[i]);
  return s;
}

inline std::string format_vector(const GentleAlgebra& alg, const RankFunction& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + alg.arrow(i).name + "=" + std::to_string(r[i]);
  return s;
}

}  // namespace gentle
