#include <gtest/gtest.h>

#include <cstdlib>

#include "support/oracles.hpp"

using namespace gentle;

namespace {

RationalRepresentation band_at(const oracle::RegularFixture& fx, const Rational& lambda) {
  auto data = updown_data(fx.alg, fx.d, fx.r);
  return specialize(updown_module(fx.alg, data, {MultiPoly(lambda)}), {});
}

Weight band_weight(const oracle::RegularFixture& fx) {
  return weight_of(fx.alg, band_pair(fx.alg, fx.d, fx.r).presentation);
}

TEST(ReduceModP, ZeroOneUnchanged) {
  auto alg = oracle::load("a2.quiver");
  auto m = specialize(updown_module(alg, updown_data(alg, DimensionVector({2, 2, 2}), RankFunction(4, 1)), {}), {});
  auto f = reduce_mod_p(alg, m, 5);
  for (std::size_t a = 0; a < alg.arrow_count(); ++a)
    for (std::size_t i = 0; i < m.maps[a].rows(); ++i)
      for (std::size_t j = 0; j < m.maps[a].cols(); ++j)
        EXPECT_EQ(f.maps[a](i, j), m.maps[a](i, j) == 1 ? 1u : 0u);
}

TEST(ReduceModP, FractionReduces) {
  EXPECT_EQ(reduce_rational(make_rational(7, 3), 5), 4u);
  EXPECT_EQ(reduce_rational(make_rational(-1, 2), 7), 3u);
  EXPECT_THROW(reduce_rational(make_rational(1, 10), 5), DomainError);
}

TEST(ReduceModP, RelationsSurvive) {
  auto fx = oracle::regular_band_fixtures()[1];
  auto f = reduce_mod_p(fx.alg, band_at(fx, make_rational(7, 3)), 5);
  for (const auto& [a, b] : relation_pairs(fx.alg)) EXPECT_TRUE((f.maps[b] * f.maps[a]).is_zero());
}

TEST(Subspaces, CountMatchesGaussianBinomials) {
  // F_5^2: 1 + 6 + 1; F_3^3: 1 + 13 + 13 + 1.
  EXPECT_EQ(subspace_count(5, 2, 1000), 8u);
  EXPECT_EQ(enumerate_subspaces(5, 2).size(), 8u);
  EXPECT_EQ(subspace_count(3, 3, 1000), 28u);
  EXPECT_EQ(enumerate_subspaces(3, 3).size(), 28u);
  EXPECT_EQ(subspace_count(5, 2, 5), 5u);
}

TEST(Submodules, SimpleAndSumOfSimples) {
  auto alg = oracle::load("a2.quiver");
  auto s = zero_representation<Rational>(alg, DimensionVector({0, 1, 0}));
  auto one = submodule_dimvectors(alg, reduce_mod_p(alg, s, 5));
  EXPECT_EQ(one, (std::set<DimensionVector>{DimensionVector({0, 0, 0}), DimensionVector({0, 1, 0})}));
  auto two = zero_representation<Rational>(alg, DimensionVector({1, 0, 1}));
  auto sub = submodule_dimvectors(alg, reduce_mod_p(alg, two, 5));
  EXPECT_EQ(sub.size(), 4u);
}

TEST(Submodules, FrozenA2BandSet) {
  auto fx = oracle::regular_band_fixtures()[0];
  auto sub = submodule_dimvectors(fx.alg, reduce_mod_p(fx.alg, band_at(fx, 2), 5));
  std::set<DimensionVector> expected{DimensionVector({0, 0, 0}), DimensionVector({0, 0, 1}),
                                     DimensionVector({0, 1, 1}), DimensionVector({0, 2, 1}),
                                     DimensionVector({1, 2, 1})};
  EXPECT_EQ(sub, expected);
}

TEST(Submodules, BudgetIsEnforced) {
  auto fx = oracle::regular_band_fixtures()[0];
  auto m = reduce_mod_p(fx.alg, band_at(fx, 2), 5);
  EXPECT_THROW(submodule_dimvectors(fx.alg, m, 3), BudgetError);
}

TEST(Stability, ZeroWeightIsSemistableOnly) {
  auto fx = oracle::regular_band_fixtures()[0];
  auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, band_at(fx, 2), 5), Weight(3, 0));
  EXPECT_EQ(cert.verdict, Verdict::SemistableNotStable);
  EXPECT_TRUE(revalidate(cert).empty());
}

TEST(Stability, RequiresDegreeZero) {
  auto fx = oracle::regular_band_fixtures()[0];
  EXPECT_THROW(check_stability(fx.alg, reduce_mod_p(fx.alg, band_at(fx, 2), 5), Weight({1, 0, 0})), DomainError);
  auto zero = zero_representation<Rational>(fx.alg, DimensionVector(3, 0));
  EXPECT_THROW(check_stability(fx.alg, reduce_mod_p(fx.alg, zero, 5), Weight(3, 0)), DomainError);
}

TEST(Stability, BandsAreStableForTheirWeight) {
  for (const auto& fx : oracle::regular_band_fixtures()) {
    auto theta = band_weight(fx);
    for (std::uint32_t p : {5u, 7u, 11u}) {
      auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, band_at(fx, 2), p), theta);
      EXPECT_EQ(cert.verdict, Verdict::Stable) << fx.label << " p=" << p;
      EXPECT_TRUE(revalidate(cert).empty());
    }
  }
}

TEST(Stability, DoubledBandIsStrictlySemistable) {
  for (const auto& fx : oracle::regular_band_fixtures()) {
    auto m = band_at(fx, 2);
    auto mm = direct_sum(fx.alg, std::vector<RationalRepresentation>{m, m});
    auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, mm, 5), band_weight(fx));
    EXPECT_EQ(cert.verdict, Verdict::SemistableNotStable) << fx.label;
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_TRUE(revalidate(cert).empty());
    EXPECT_TRUE(cert.realized.count(fx.d));
  }
}

TEST(Stability, DegenerateParameterIsNotStable) {
  auto fx = oracle::regular_band_fixtures()[0];
  auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, band_at(fx, make_rational(7, 3)), 7), band_weight(fx));
  EXPECT_NE(cert.verdict, Verdict::Stable);
}

TEST(Stability, TamperedCertificateFailsRevalidation) {
  auto fx = oracle::regular_band_fixtures()[0];
  auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, band_at(fx, 2), 5), band_weight(fx));
  auto bad = cert;
  bad.verdict = Verdict::Unstable;
  EXPECT_FALSE(revalidate(bad).empty());
  bad = cert;
  bad.realized.erase(DimensionVector(3, 0));
  EXPECT_FALSE(revalidate(bad).empty());
  bad = cert;
  bad.realized.insert(DimensionVector({1, 0, 0}));
  EXPECT_FALSE(revalidate(bad).empty());
}

TEST(Stability, UnstableWitnessDestabilizes) {
  auto fx = oracle::regular_band_fixtures()[0];
  auto cert = check_stability(fx.alg, reduce_mod_p(fx.alg, band_at(fx, 2), 5), Weight({-1, 0, 1}));
  EXPECT_EQ(cert.verdict, Verdict::Unstable);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_GT(weight_pairing(cert.theta, *cert.witness), 0);
  EXPECT_TRUE(revalidate(cert).empty());
}

TEST(Budget, EnvironmentOverride) {
  ::setenv("GENTLE_BUDGET", "42", 1);
  EXPECT_EQ(budget_from_environment(), 42u);
  ::setenv("GENTLE_BUDGET", "lots", 1);
  EXPECT_THROW(budget_from_environment(), DomainError);
  ::unsetenv("GENTLE_BUDGET");
  EXPECT_EQ(budget_from_environment(), kDefaultBudget);
}

}  // namespace
