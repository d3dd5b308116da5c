#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace gentle;

namespace {

TEST(Flags, NamedAndPositionalVectors) {
  auto alg = oracle::load("a2.quiver");
  EXPECT_EQ(parse_dimension_vector(alg, "1=2,3=5"), DimensionVector({2, 0, 5}));
  EXPECT_EQ(parse_dimension_vector(alg, "2,2,2"), DimensionVector({2, 2, 2}));
  EXPECT_EQ(parse_rank_function(alg, "a1=1,b2=1"), RankFunction({1, 0, 0, 1}));
  EXPECT_EQ(parse_weight(alg, "1=1,3=-1"), Weight({1, 0, -1}));
}

TEST(Flags, RejectUnknownNamesAndBadValues) {
  auto alg = oracle::load("a2.quiver");
  EXPECT_THROW(parse_dimension_vector(alg, "9=1"), Error);
  EXPECT_THROW(parse_dimension_vector(alg, "1,2"), DomainError);
  EXPECT_THROW(parse_dimension_vector(alg, "1=-1"), DomainError);
  EXPECT_THROW(parse_dimension_vector(alg, "1=1,1=2"), DomainError);
  EXPECT_THROW(parse_rank_function(alg, "zz=1"), Error);
  EXPECT_THROW(parse_rank_function(alg, "a1=x"), DomainError);
}

TEST(Flags, Parameters) {
  auto p = parse_parameters("b1=2/3,b2=-5");
  EXPECT_EQ(p.at("b1"), make_rational(2, 3));
  EXPECT_EQ(p.at("b2"), Rational(-5));
  EXPECT_THROW(parse_parameters("b1"), DomainError);
  EXPECT_THROW(parse_parameters("b1=1,b1=2"), DomainError);
}

TEST(Flags, Signs) {
  auto alg = oracle::load("a2.quiver");
  auto s = parse_signs(alg, "2:a=+1,2:b=-1");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(std::get<2>(s[1]), -1);
  EXPECT_THROW(parse_signs(alg, "2:a=0"), DomainError);
  EXPECT_THROW(parse_signs(alg, "2a=1"), DomainError);
}

TEST(Flags, FormatRoundTrips) {
  auto alg = oracle::load("fourcolor.quiver");
  auto d = parse_dimension_vector(alg, "3,4,1,2,3,2");
  EXPECT_EQ(parse_dimension_vector(alg, format_vector(alg, d)), d);
  auto r = parse_rank_function(alg, "3,1,2,1,2,2,2,1");
  EXPECT_EQ(parse_rank_function(alg, format_vector(alg, r)), r);
}

}  // namespace
