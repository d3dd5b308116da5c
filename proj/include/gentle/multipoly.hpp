#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gentle/error.hpp"
#include "gentle/rational.hpp"

namespace gentle {

/// Values for named indeterminates.
using Assignment = std::map<std::string, Rational>;

/// Sparse multivariate polynomial over the rationals with named variables.
///
/// Each polynomial carries its own ordered variable list; binary operations merge
/// the lists (left operand's order first). Terms are kept in graded lexicographic
/// order relative to that list, leading term first, and zero coefficients are
/// never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
  }

  static MultiPoly monomial(const Rational& coeff, const std::vector<std::pair<std::string, unsigned>>& powers) {
    MultiPoly p(coeff);
    for (const auto& [name, e] : powers)
      for (unsigned k = 0; k < e; ++k) p = p * variable(name);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  /// Value of a constant polynomial; throws if a variable occurs.
  Rational constant_value() const {
    if (!is_constant()) throw SpecializationError("polynomial " + to_string() + " is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  /// Variables that occur with a nonzero exponent.
  std::vector<std::string> used_variables() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < vars_.size(); ++v)
      for (const auto& [e, c] : terms_)
        if (e[v] > 0) {
          out.push_back(vars_[v]);
          break;
        }
    return out;
  }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
  }

  unsigned degree_in(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return 0;
    std::size_t v = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }

  /// Coefficient of the monomial given as (name, exponent) pairs; absent names have exponent 0.
  Rational coefficient(const std::vector<std::pair<std::string, unsigned>>& powers) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [name, k] : powers) {
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        if (k == 0) continue;
        return 0;
      }
      e[static_cast<std::size_t>(it - vars_.begin())] = k;
    }
    auto t = terms_.find(e);
    return t == terms_.end() ? Rational(0) : t->second;
  }

  /// Full evaluation; every occurring variable must be assigned.
  Rational evaluate(const Assignment& values) const {
    std::vector<std::optional<Rational>> val(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      auto it = values.find(vars_[v]);
      if (it != values.end()) val[v] = it->second;
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!val[v]) throw SpecializationError("no value for variable '" + vars_[v] + "'");
        for (unsigned k = 0; k < e[v]; ++k) t *= *val[v];
      }
      sum += t;
    }
    return sum;
  }

  /// Partial evaluation; unassigned variables stay symbolic.
  MultiPoly substitute(const Assignment& values) const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      Rational coeff = c;
      Exponents rest = e;
      for (std::size_t v = 0; v < e.size(); ++v) {
        auto it = values.find(vars_[v]);
        if (it == values.end() || e[v] == 0) continue;
        for (unsigned k = 0; k < e[v]; ++k) coeff *= it->second;
        rest[v] = 0;
      }
      out.add_term(rest, coeff);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) {
      MultiPoly r = a;
      for (const auto& [e, c] : b.terms_) r.add_term(e, c);
      return r;
    }
    auto vars = merge(a.vars_, b.vars_);
    MultiPoly r = a.with_variables(vars);
    MultiPoly s = b.with_variables(vars);
    for (const auto& [e, c] : s.terms_) r.add_term(e, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    if (a.vars_ != b.vars_) {
      auto vars = merge(a.vars_, b.vars_);
      return a.with_variables(vars) * b.with_variables(vars);
    }
    MultiPoly r;
    r.vars_ = a.vars_;
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  /// Exact quotient a / d, or nullopt if d does not divide a.
  std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    if (vars_ != divisor.vars_) {
      auto vars = merge(vars_, divisor.vars_);
      return with_variables(vars).try_divide(divisor.with_variables(vars));
    }
    if (divisor.is_constant()) {
      MultiPoly q = *this;
      Rational inv = 1 / divisor.constant_value();
      for (auto& [e, c] : q.terms_) c *= inv;
      return q;
    }
    MultiPoly rem = *this;
    MultiPoly quot;
    quot.vars_ = vars_;
    const auto& [lead_e, lead_c] = *divisor.terms_.begin();
    Exponents qe(vars_.size());
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.begin();
      for (std::size_t v = 0; v < qe.size(); ++v) {
        if (re[v] < lead_e[v]) return std::nullopt;
        qe[v] = re[v] - lead_e[v];
      }
      Rational qc = rc / lead_c;
      quot.add_term(qe, qc);
      for (const auto& [de, dc] : divisor.terms_) {
        Exponents prod(qe.size());
        for (std::size_t v = 0; v < qe.size(); ++v) prod[v] = qe[v] + de[v];
        rem.add_term(prod, -qc * dc);
      }
    }
    return quot;
  }

  MultiPoly divide_exact(const MultiPoly& divisor) const {
    auto q = try_divide(divisor);
    if (!q) throw DomainError("inexact polynomial division: (" + to_string() + ") / (" + divisor.to_string() + ")");
    return *q;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merge(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
  }

  /// Canonical text, e.g. "3*lambda^2*mu - 1/2*mu + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      std::string mono;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[v];
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      std::string term;
      if (mono.empty())
        term = mag.get_str();
      else if (mag == 1)
        term = mono;
      else
        term = mag.get_str() + "*" + mono;
      if (first)
        out += (negative ? "-" : "") + term;
      else
        out += (negative ? " - " : " + ") + term;
      first = false;
    }
    return out;
  }

  /// Re-expresses the polynomial over `vars`, which must contain every used variable.
  MultiPoly with_variables(const std::vector<std::string>& vars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      auto it = std::find(vars.begin(), vars.end(), vars_[v]);
      if (it == vars.end()) {
        for (const auto& [e, c] : terms_)
          if (e[v] != 0) throw InvariantError("variable '" + vars_[v] + "' dropped from context");
        where[v] = vars.size();
      } else {
        where[v] = static_cast<std::size_t>(it - vars.begin());
      }
    }
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
      Exponents ne(vars.size(), 0);
      for (std::size_t v = 0; v < e.size(); ++v)
        if (where[v] < vars.size()) ne[where[v]] = e[v];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

 private:
  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
      unsigned da = total_degree(a), db = total_degree(b);
      if (da != db) return da > db;
      return a > b;
    }
  };

  static unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

  static std::vector<std::string> merge(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  std::map<Exponents, Rational, GrlexGreater> terms_;
};

inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

}  // namespace gentle
