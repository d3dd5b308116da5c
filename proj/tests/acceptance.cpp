// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "support/oracles.hpp"

using namespace gentle;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kFourColorSeconds = 1.0;
constexpr double kSuiteSeconds = 300.0;
constexpr int kRegularQuivers = 25;
constexpr int kEulerPairs = 50;
constexpr int kConjugations = 20;
constexpr int kSeparationTrials = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome criterion1() {
  Outcome out;
  auto start = Clock::now();
  auto alg = oracle::load("fourcolor.quiver");
  auto d = parse_dimension_vector(alg, "3,4,1,2,3,2");
  auto r = parse_rank_function(alg, "3,1,2,1,2,2,2,1");
  auto eps = SignFunction::with_overrides(
      alg, parse_signs(alg, "1:solid=-1,2:solid=-1,3:solid=+1,4:dashed=-1,5:dotted=-1,6:dashed=+1"));
  auto comps = classify_components(alg, updown_graph(alg, d, r, eps));
  int bands = 0, strings = 0;
  for (const auto& c : comps) (c.kind == ComponentKind::Band ? bands : strings)++;
  double t = seconds_since(start);
  out.require(bands == 1 && strings == 1,
              "got " + std::to_string(bands) + " bands, " + std::to_string(strings) + " strings");
  out.require(t < kFourColorSeconds, "took " + std::to_string(t) + " s");
  if (out.pass) out.detail = "1 band + 1 string in " + std::to_string(t) + " s";
  return out;
}

Outcome criterion2() {
  Outcome out;
  auto alg = oracle::load("a2.quiver");
  auto dec = generic_decomposition(alg, DimensionVector({2, 2, 2}), RankFunction(4, 1));
  out.require(dec.entries.size() == 2, "expected two summands");
  if (!out.pass) return out;
  const RankFunction r1({1, 0, 0, 1}), r2({0, 1, 1, 0});
  for (const auto& e : dec.entries) {
    out.require(e.kind == ComponentKind::String, "summand is not a string");
    out.require(e.multiplicity == 1, "multiplicity is not 1");
    out.require(e.dim == DimensionVector({1, 1, 1}), "summand dimension is not (1,1,1)");
  }
  out.require(dec.entries[0].rank == r1 && dec.entries[1].rank == r2, "summand ranks differ from a1=b2=1, a2=b1=1");
  out.require(dec.transcendence_degree() == 0, "trdeg is not 0");
  if (out.pass) out.detail = dec.entries[0].word + " + " + dec.entries[1].word + ", trdeg 0";
  return out;
}

Outcome criterion3() {
  Outcome out;
  auto alg = oracle::load("closedpath.quiver");
  DimensionVector d(alg.vertex_count(), 1);
  auto rs = maximal_rank_functions(alg, d);
  out.require(rs.size() == 2, std::to_string(rs.size()) + " maximal rank functions");
  if (!out.pass) return out;
  int band_trdeg = -1, string_trdeg = -1;
  for (const auto& r : rs) {
    auto dec = generic_decomposition(alg, d, r);
    out.require(dec.entries.size() == 1 && dec.entries[0].multiplicity == 1, "generic module is not indecomposable");
    if (!out.pass) return out;
    (dec.entries[0].kind == ComponentKind::Band ? band_trdeg : string_trdeg) = dec.transcendence_degree();
  }
  out.require(band_trdeg == 1 && string_trdeg == 0, "expected one band (trdeg 1) and one string (trdeg 0)");
  if (out.pass) out.detail = "band trdeg 1, string trdeg 0";
  return out;
}

Outcome criterion4() {
  Outcome out;
  try {
    oracle::load("butterfly.quiver");
    out.require(false, "butterfly accepted");
  } catch (const GentleAxiomError& e) {
    out.require(e.axiom() == 3, "wrong axiom reported: " + std::string(e.what()));
    out.detail = e.what();
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  std::mt19937_64 rng(5005);
  int checked = 0, attempts = 0;
  while (checked < kRegularQuivers && attempts < 5000) {
    ++attempts;
    std::uniform_int_distribution<std::size_t> size(3, 6);
    auto alg = oracle::random_gentle(rng, size(rng), attempts % 2 == 0);
    if (!alg) continue;
    std::vector<DimensionVector> regular;
    for (const auto& d : oracle::all_dimension_vectors(alg->vertex_count(), 4))
      if (!d.is_zero() && regular_rank_function(*alg, d)) regular.push_back(d);
    if (regular.empty()) continue;
    const auto& d = regular[std::uniform_int_distribution<std::size_t>(0, regular.size() - 1)(rng)];
    auto r = *regular_rank_function(*alg, d);
    auto bounded = oracle::all_bounded_rank_functions(*alg, d);
    if (bounded.size() > 400000) continue;
    std::string where = print_quiver(*alg) + "d = " + format_vector(*alg, d);
    out.require(euler_form(*alg, d, d) == 0, "<<d,d>> != 0 for " + where);
    int count = 0;
    for (const auto& cand : bounded)
      if (is_rank_function(*alg, d, cand).ok() && is_regular(*alg, d, cand)) {
        ++count;
        out.require(cand == r, "a different regular rank function exists for " + where);
      }
    out.require(count == 1, "regular rank function not unique for " + where);
    for (std::size_t s = 0; s < alg->color_count(); ++s) {
      auto verts = alg->color_path_vertices(s);
      long long alt = 0;
      for (std::size_t k = 0; k < verts.size(); ++k) alt += (k % 2 ? -1 : 1) * d[verts[k]];
      out.require(alt == 0, "alternating sum along color " + alg->color_name(s) + " is not 0 for " + where);
    }
    out.require(generic_decomposition(*alg, d, r).all_bands(), "regular component has a string for " + where);
    ++checked;
  }
  out.require(checked >= kRegularQuivers, "only " + std::to_string(checked) + " regular quivers found");
  if (out.pass) out.detail = std::to_string(checked) + " random regular quivers";
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::mt19937_64 rng(6006);
  auto fixtures = oracle::regular_band_fixtures();
  for (const auto& fx : fixtures) {
    Rational lambda, mu;
    do {
      lambda = oracle::random_rational(rng, 50);
      mu = oracle::random_rational(rng, 50);
    } while (lambda == 0 || mu == 0 || lambda == mu);
    auto data = updown_data(fx.alg, fx.d, fx.r);
    auto ml = specialize(updown_module(fx.alg, data, {MultiPoly(lambda)}), {});
    auto mm = specialize(updown_module(fx.alg, data, {MultiPoly(mu)}), {});
    out.require(hom_dim(fx.alg, ml, ml) == 1, "End != 1 for " + fx.label);
    out.require(ext1_dim(fx.alg, ml, ml) == 1, "Ext1(M,M) != 1 for " + fx.label);
    out.require(ext1_dim(fx.alg, ml, mm) == 0, "Ext1(M_l,M_m) != 0 for " + fx.label);
  }
  if (out.pass) out.detail = std::to_string(fixtures.size()) + " regular band fixtures";
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::mt19937_64 rng(7007);
  int checked = 0, attempts = 0;
  while (checked < kEulerPairs && attempts < 2000) {
    ++attempts;
    auto alg = oracle::random_gentle(rng, std::uniform_int_distribution<std::size_t>(3, 5)(rng));
    if (!alg) continue;
    auto x = oracle::random_representation(*alg, rng, 2);
    if (!has_projective_dimension_at_most_one(*alg, x)) continue;
    auto n = oracle::random_representation(*alg, rng, 2);
    long long lhs = euler_form(*alg, x.dims, n.dims);
    long long rhs = static_cast<long long>(hom_dim(*alg, x, n)) - ext1_dim(*alg, x, n);
    out.require(lhs == rhs, "euler " + std::to_string(lhs) + " vs hom-ext " + std::to_string(rhs) + " on " +
                                print_quiver(*alg));
    ++checked;
  }
  out.require(checked >= kEulerPairs, "only " + std::to_string(checked) + " pairs with pdim <= 1");
  if (out.pass) out.detail = std::to_string(checked) + " random pairs";
  return out;
}

Outcome criterion8() {
  Outcome out;
  for (const auto& fx : oracle::regular_band_fixtures()) {
    try {
      auto e = band_exponents(fx.alg, fx.d, fx.r);
      out.require(e.p >= 0 && e.l >= 0 && e.unit != 0, "bad exponents for " + fx.label);
    } catch (const InvariantError& err) {
      out.require(false, fx.label + ": " + err.what());
    }
  }
  struct Config {
    const char* quiver;
    const char* dim;
    std::vector<std::vector<Rational>> mu;
  };
  std::vector<Config> configs{{"twoband.quiver", "1,2,2,1", {{3}, {7}}},
                              {"crossband.quiver", "1,2,2,1,1", {{3}, {7}}},
                              {"a2.quiver", "2,4,2", {{3, 7}}}};
  for (const auto& c : configs) {
    auto alg = oracle::load(c.quiver);
    auto d = parse_dimension_vector(alg, c.dim);
    auto fam = band_families(alg, d, *regular_rank_function(alg, d));
    for (std::size_t i = 0; i < fam.size(); ++i) {
      auto check = multi_band_eval(alg, fam, i, make_rational(5, 2), c.mu);
      out.require(check.matches && check.lhs != 0, std::string(c.quiver) + " family " + std::to_string(i) + ": " +
                                                       check.lhs.get_str() + " vs " + check.rhs.get_str());
    }
  }
  if (out.pass) out.detail = "shape on all fixtures; two-band and multiplicity-2 products exact";
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::mt19937_64 rng(9009);
  int conjugations = 0;
  for (const auto& fx : oracle::regular_band_fixtures()) {
    auto data = updown_data(fx.alg, fx.d, fx.r);
    auto pres = band_presentation(fx.alg, data, {MultiPoly(make_rational(3, 2))});
    auto theta = weight_of(fx.alg, pres);
    auto m = specialize(updown_module(fx.alg, data, {MultiPoly(make_rational(-4, 5))}), {});
    Rational base = schofield_si_at(fx.alg, pres, m, {});
    out.require(base != 0, "semi-invariant vanishes on a generic module of " + fx.label);
    for (int t = 0; t < kConjugations; ++t) {
      std::vector<RationalMatrix> g, diag;
      Rational factor = 1;
      for (std::size_t v = 0; v < fx.alg.vertex_count(); ++v) {
        auto n = static_cast<std::size_t>(fx.d[v]);
        RationalMatrix x;
        Rational det;
        do {
          x = oracle::random_matrix(rng, n, n, 4);
          det = determinant(x);
        } while (det == 0);
        for (std::size_t c = 0; c < n; ++c) x(0, c) /= det;
        g.push_back(x);
        RationalMatrix s(n, n);
        Rational sdet = 1;
        for (std::size_t k = 0; k < n; ++k) {
          do s(k, k) = oracle::random_rational(rng); while (s(k, k) == 0);
          sdet *= s(k, k);
        }
        diag.push_back(s);
        // act() applies g M g^-1, which is the contragredient of the weight's convention.
        for (int k = 0; k < std::abs(theta[v]); ++k) factor = theta[v] > 0 ? Rational(factor / sdet) : Rational(factor * sdet);
      }
      out.require(schofield_si_at(fx.alg, pres, act(fx.alg, g, m), {}) == base, "unimodular change moved the value for " + fx.label);
      out.require(schofield_si_at(fx.alg, pres, act(fx.alg, diag, m), {}) == factor * base,
                  "diagonal scaling differs from det^theta for " + fx.label);
      ++conjugations;
    }
  }
  if (out.pass) out.detail = std::to_string(conjugations) + " conjugations, each with a diagonal scaling";
  return out;
}

Outcome criterion10() {
  Outcome out;
  auto alg = oracle::load("a2.quiver");
  auto fam = band_families(alg, DimensionVector({2, 4, 2}), RankFunction(4, 2));
  out.require(fam.size() == 1 && fam.multiplicity[0] == 2, "family is not n=1, m=2");
  const std::vector<std::vector<Rational>> grid{{7, 11, 13}};
  const std::vector<Rational> mu{2, 3};
  auto perm = separation_test(alg, fam, grid, {mu}, {{mu[1], mu[0]}});
  out.require(perm.ratios_agree, "ratios differ under a permutation of mu");
  std::mt19937_64 rng(10010);
  int trials = 0;
  while (trials < kSeparationTrials) {
    std::vector<Rational> nu{oracle::random_rational(rng, 20), oracle::random_rational(rng, 20)};
    bool bad = nu[0] == nu[1];
    for (const auto& v : nu) bad = bad || v == 0 || v == 11 || v == 13;
    auto sorted = nu;
    std::sort(sorted.begin(), sorted.end());
    if (bad || sorted == std::vector<Rational>{2, 3}) continue;
    auto res = separation_test(alg, fam, grid, {mu}, {nu});
    out.require(!res.ratios_agree, "ratios agree for nu = (" + nu[0].get_str() + ", " + nu[1].get_str() + ")");
    ++trials;
  }
  if (out.pass) out.detail = "permutation agrees; " + std::to_string(trials) + " random nu separated";
  return out;
}

Outcome criterion11(Clock::time_point suite_start) {
  Outcome out;
  int certificates = 0;
  for (const auto& fx : oracle::regular_band_fixtures()) {
    auto theta = weight_of(fx.alg, band_pair(fx.alg, fx.d, fx.r).presentation);
    auto data = updown_data(fx.alg, fx.d, fx.r);
    auto m = specialize(updown_module(fx.alg, data, {MultiPoly(2)}), {});
    for (std::uint32_t p : {5u, 7u, 11u}) {
      auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, m, p), theta);
      out.require(cert.verdict == Verdict::Stable, fx.label + " is " + to_string(cert.verdict) + " over F_" + std::to_string(p));
      out.require(revalidate(cert).empty(), "certificate of " + fx.label + " does not revalidate");
      ++certificates;
    }
    auto mm = direct_sum(fx.alg, std::vector<RationalRepresentation>{m, m});
    auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, mm, 5), theta);
    out.require(cert.verdict == Verdict::SemistableNotStable, fx.label + " doubled is " + to_string(cert.verdict));
    out.require(cert.witness && weight_pairing(theta, *cert.witness) == 0, "bad witness for doubled " + fx.label);
    out.require(revalidate(cert).empty(), "doubled certificate of " + fx.label + " does not revalidate");
    ++certificates;
  }
  double t = seconds_since(suite_start);
  out.require(t <= kSuiteSeconds, "suite took " + std::to_string(t) + " s");
  if (out.pass) out.detail = std::to_string(certificates) + " certificates; suite " + std::to_string(t) + " s";
  return out;
}

}  // namespace

int main() {
  auto start = Clock::now();
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8,
                                                 criterion9, criterion10, [&] { return criterion11(start); }};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
