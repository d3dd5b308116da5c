#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/fp.hpp"
#include "gentle/quiver.hpp"
#include "gentle/representation.hpp"

namespace gentle {

inline constexpr unsigned long long kDefaultBudget = 100000000ULL;

/// Representation over F_p.
struct FpRepresentation {
  std::uint32_t prime = 0;
  DimensionVector dims;
  std::vector<FpMatrix> maps;
};

inline std::uint32_t reduce_rational(const Rational& q, std::uint32_t p) {
  Integer den = q.get_den();
  Integer num = q.get_num();
  Integer dm = den % p;
  if (dm == 0) throw DomainError("denominator " + den.get_str() + " is divisible by " + std::to_string(p) + "; choose another prime");
  Integer nm = num % p;
  if (nm < 0) nm += p;
  std::uint32_t n = static_cast<std::uint32_t>(nm.get_ui());
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * fp_inverse(static_cast<std::uint32_t>(dm.get_ui()), p) % p);
}

inline FpRepresentation reduce_mod_p(const GentleAlgebra& alg, const RationalRepresentation& m, std::uint32_t p) {
  require_small_prime(p);
  check_shapes(alg, m);
  FpRepresentation out{p, m.dims, {}};
  for (const auto& mat : m.maps) {
    FpMatrix f(p, mat.rows(), mat.cols());
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c) f.set(r, c, reduce_rational(mat(r, c), p));
    out.maps.push_back(std::move(f));
  }
  for (const auto& [a, b] : relation_pairs(alg))
    if (!(out.maps[b] * out.maps[a]).is_zero())
      throw InvariantError("relation " + alg.arrow(b).name + "*" + alg.arrow(a).name + " is nonzero mod " +
                           std::to_string(p));
  return out;
}

/// Number of subspaces of F_p^n (sum of Gaussian binomials), saturating at `cap`.
inline unsigned long long subspace_count(std::uint32_t p, int n, unsigned long long cap) {
  // [n choose k]_p via the recurrence [n,k] = [n-1,k-1] + p^k [n-1,k].
  std::vector<long double> row{1.0L};
  for (int m = 1; m <= n; ++m) {
    std::vector<long double> next(static_cast<std::size_t>(m) + 1, 0.0L);
    long double pk = 1.0L;
    for (int k = 0; k <= m; ++k) {
      long double left = k > 0 ? row[static_cast<std::size_t>(k) - 1] : 0.0L;
      long double right = k < m ? row[static_cast<std::size_t>(k)] : 0.0L;
      next[static_cast<std::size_t>(k)] = left + pk * right;
      pk *= p;
    }
    row = std::move(next);
  }
  long double total = 0;
  for (auto x : row) total += x;
  return total >= static_cast<long double>(cap) ? cap : static_cast<unsigned long long>(total + 0.5L);
}

/// All subspaces of F_p^n as reduced-echelon row bases, ordered by dimension and
/// then by pivot pattern and entries.
inline std::vector<std::vector<FpVector>> enumerate_subspaces(std::uint32_t p, int n) {
  std::vector<std::vector<FpVector>> out;
  const std::size_t un = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k <= un; ++k) {
    std::vector<std::size_t> pivots(k);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t from) {
      if (idx == k) {
        // free positions: (row i, col c) with c > pivots[i] and c not a pivot column
        std::vector<std::pair<std::size_t, std::size_t>> free;
        std::vector<bool> is_pivot(un, false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t c = pivots[i] + 1; c < un; ++c)
            if (!is_pivot[c]) free.emplace_back(i, c);
        std::vector<std::uint32_t> vals(free.size(), 0);
        while (true) {
          std::vector<FpVector> basis(k, FpVector(un, 0));
          for (std::size_t i = 0; i < k; ++i) basis[i][pivots[i]] = 1;
          for (std::size_t f = 0; f < free.size(); ++f) basis[free[f].first][free[f].second] = vals[f];
          out.push_back(std::move(basis));
          std::size_t f = 0;
          while (f < vals.size() && ++vals[f] == p) vals[f++] = 0;
          if (f == vals.size()) break;
        }
        return;
      }
      for (std::size_t c = from; c + (k - idx) <= un; ++c) {
        pivots[idx] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

namespace detail {

// True if v lies in the span of the reduced-echelon rows `basis`.
inline bool in_span(const std::vector<FpVector>& basis, FpVector v, std::uint32_t p) {
  for (const auto& row : basis) {
    std::size_t piv = 0;
    while (row[piv] == 0) ++piv;
    std::uint32_t f = v[piv];
    if (!f) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = (v[c] + (p - f) * row[c]) % p;
  }
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace detail

/// Dimension vectors of all subrepresentations of M, found by enumerating tuples of
/// subspaces closed under the arrow maps. Throws BudgetError when the number of tuples
/// could exceed `budget`.
inline std::set<DimensionVector> submodule_dimvectors(const GentleAlgebra& alg, const FpRepresentation& m,
                                                      unsigned long long budget = kDefaultBudget) {
  const std::size_t nv = alg.vertex_count();
  unsigned long long total = 1;
  for (std::size_t v = 0; v < nv; ++v) {
    unsigned long long c = subspace_count(m.prime, m.dims[v], budget + 1);
    if (c > budget || total > budget / c)
      throw BudgetError("submodule enumeration needs more than " + std::to_string(budget) +
                        " subspace tuples; raise GENTLE_BUDGET or shrink the module");
    total *= c;
  }
  std::vector<std::vector<std::vector<FpVector>>> spaces(nv);
  for (std::size_t v = 0; v < nv; ++v) spaces[v] = enumerate_subspaces(m.prime, m.dims[v]);

  const auto& order = alg.topological_order();
  // Arrows checked once their later endpoint (the head, in topological order) is assigned.
  std::vector<std::vector<std::size_t>> check_at(nv);
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) check_at[alg.arrow(a).head].push_back(a);

  std::set<DimensionVector> found;
  std::vector<std::size_t> choice(nv, 0);
  DimensionVector dim(nv, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      found.insert(dim);
      return;
    }
    const std::size_t v = order[k];
    for (std::size_t idx = 0; idx < spaces[v].size(); ++idx) {
      const auto& u = spaces[v][idx];
      bool closed = true;
      for (auto a : check_at[v]) {
        const auto& ut = spaces[alg.arrow(a).tail][choice[alg.arrow(a).tail]];
        for (const auto& vec : ut)
          if (!detail::in_span(u, m.maps[a].apply(vec), m.prime)) {
            closed = false;
            break;
          }
        if (!closed) break;
      }
      if (!closed) continue;
      choice[v] = idx;
      dim[v] = static_cast<int>(u.size());
      rec(k + 1);
    }
    dim[v] = 0;
  };
  rec(0);
  return found;
}

enum class Verdict { Stable, SemistableNotStable, Unstable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "stable";
    case Verdict::SemistableNotStable:
      return "semistable-not-stable";
    default:
      return "unstable";
  }
}

/// King (semi)stability verdict over F_p with everything needed to re-check it.
struct StabilityCertificate {
  Verdict verdict = Verdict::Stable;
  std::optional<DimensionVector> witness;
  std::set<DimensionVector> realized;
  DimensionVector dim;
  Weight theta;
  std::uint32_t prime = 0;
};

/// Semistable: theta(dim M') <= 0 for every submodule; stable: < 0 for every proper
/// nonzero one. The witness is the first realized vector breaking the stronger condition.
inline StabilityCertificate check_stability(const GentleAlgebra& alg, const FpRepresentation& m, const Weight& theta,
                                            unsigned long long budget = kDefaultBudget) {
  if (theta.size() != alg.vertex_count()) throw DimensionError("weight length does not match the quiver");
  long long total = weight_pairing(theta, m.dims);
  if (total != 0) throw DomainError("theta(dim M) = " + std::to_string(total) + " is not zero");
  if (m.dims.is_zero()) throw DomainError("stability is not defined for the zero module");
  StabilityCertificate cert;
  cert.dim = m.dims;
  cert.theta = theta;
  cert.prime = m.prime;
  cert.realized = submodule_dimvectors(alg, m, budget);
  const DimensionVector zero(alg.vertex_count(), 0);
  for (const auto& v : cert.realized)
    if (weight_pairing(theta, v) > 0) {
      cert.verdict = Verdict::Unstable;
      cert.witness = v;
      return cert;
    }
  for (const auto& v : cert.realized)
    if (v != zero && v != m.dims && weight_pairing(theta, v) == 0) {
      cert.verdict = Verdict::SemistableNotStable;
      cert.witness = v;
      return cert;
    }
  cert.verdict = Verdict::Stable;
  return cert;
}

/// Re-derives the verdict from the certificate's own data; returns a list of problems (empty if valid).
inline std::vector<std::string> revalidate(const StabilityCertificate& cert) {
  std::vector<std::string> problems;
  const DimensionVector zero(cert.dim.size(), 0);
  if (weight_pairing(cert.theta, cert.dim) != 0) problems.push_back("theta(dim M) is not zero");
  if (!cert.realized.count(zero)) problems.push_back("zero submodule missing");
  if (!cert.realized.count(cert.dim)) problems.push_back("M itself missing");
  for (const auto& v : cert.realized)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 || v[i] > cert.dim[i]) problems.push_back("realized vector outside [0, dim M]");
  bool any_positive = false, any_proper_zero = false;
  for (const auto& v : cert.realized) {
    long long t = weight_pairing(cert.theta, v);
    if (t > 0) any_positive = true;
    if (t == 0 && v != zero && v != cert.dim) any_proper_zero = true;
  }
  Verdict expected = any_positive ? Verdict::Unstable
                     : any_proper_zero ? Verdict::SemistableNotStable
                                       : Verdict::Stable;
  if (expected != cert.verdict) problems.push_back("verdict does not follow from the realized vectors");
  if (cert.verdict == Verdict::Stable) {
    if (cert.witness) problems.push_back("stable certificate carries a witness");
  } else if (!cert.witness) {
    problems.push_back("missing witness");
  } else {
    const auto& w = *cert.witness;
    long long t = weight_pairing(cert.theta, w);
    if (!cert.realized.count(w)) problems.push_back("witness is not a realized submodule vector");
    if (cert.verdict == Verdict::Unstable && t <= 0) problems.push_back("witness does not destabilize");
    if (cert.verdict == Verdict::SemistableNotStable && (t != 0 || w == zero || w == cert.dim))
      problems.push_back("witness is not a proper nonzero vector with theta = 0");
  }
  return problems;
}

/// Budget from GENTLE_BUDGET if set, otherwise the default.
inline unsigned long long budget_from_environment() {
  const char* raw = std::getenv("GENTLE_BUDGET");
  if (!raw || !*raw) return kDefaultBudget;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument("budget");
    return v;
  } catch (const std::exception&) {
    throw DomainError("GENTLE_BUDGET must be a positive integer, got '" + std::string(raw) + "'");
  }
}

}  // namespace gentle
