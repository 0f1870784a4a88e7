// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/linear_code.h"

#include <gtest/gtest.h>

#include "support.h"
#include "varcodes/families.h"

namespace varcodes {
namespace {

using testing::Klein;

EnumerationOptions Opts(Strategy s = Strategy::kAuto, unsigned budget = 9) {
  EnumerationOptions o;
  o.strategy = s;
  o.budget = budget;
  return o;
}

WeightDistribution ToCppInt(const std::vector<std::uint64_t>& a) {
  return WeightDistribution(a.begin(), a.end());
}

TEST(Families, Dimensions) {
  const CodeFamilies fam = Klein().families();
  const LinearCode e1 = fam.E(1);
  EXPECT_EQ(e1.dimension(), 1u);
  EXPECT_EQ(MinDistance(e1, Opts()).distance, 22u);
  for (std::size_t s = 0; s <= 22; ++s) {
    EXPECT_EQ(fam.E(s).dimension(), s);
    EXPECT_EQ(fam.C(s).dimension(), 22 - s);
  }
  const IndexSet et3 = fam.sigma_at_least(3);
  IndexSet expect;
  for (std::size_t i = 0; i < 17; ++i) expect.push_back(i);
  expect.push_back(18);
  EXPECT_EQ(et3, expect);
  EXPECT_EQ(fam.Et(3).dimension(), 18u);
  EXPECT_EQ(fam.Ct(4).dimension(), 17u);
  EXPECT_EQ(fam.Et(23).dimension(), 0u);
  EXPECT_THROW(fam.first(23), Error);
}

// C(s) is the dual of E(s): same row space, orthogonal, complementary dimension.
TEST(Families, CIsDualOfE) {
  const CodeFamilies fam = Klein().families();
  const FieldSpec& f = Klein().ring()->f();
  for (std::size_t s = 0; s <= 22; ++s) {
    const LinearCode e = fam.E(s), c = fam.C(s);
    EXPECT_TRUE(c.same_code(DualCode(e)));
    for (const Vec& a : e.generator().row_list())
      for (const Vec& b : c.generator().row_list()) EXPECT_EQ(Dot(f, a, b), 0);
    EXPECT_TRUE(DualCode(DualCode(e)).same_code(e));
  }
}

TEST(LinearCode, DualOfFullAndZero) {
  const FieldPtr& f = Klein().ring()->field();
  EXPECT_EQ(DualCode(LinearCode::Full(f, 22)).dimension(), 0u);
  EXPECT_EQ(DualCode(LinearCode::Zero(f, 22)).dimension(), 22u);
  EXPECT_EQ(MinDistance(LinearCode::Full(f, 22), Opts()).distance, 1u);
  try {
    MinDistance(LinearCode::Zero(f, 22));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptySet);
  }
}

TEST(LinearCode, DependentRowsReduceToBasis) {
  const FieldPtr& f = Klein().ring()->field();
  const Matrix g = Matrix::FromRows(3, {{1, 2, 3}, {2, 4, 6}, {1, 2, 3}});
  const LinearCode c(f, 3, g);
  EXPECT_EQ(c.dimension(), 1u);  // 2 * (1, a, a+1) = (a, a^2, a^2+a)
}

TEST(Distance, SharpValuesWithinBudget) {
  const CodeFamilies fam = Klein().families();
  EXPECT_EQ(MinDistance(fam.C(21), Opts()).distance, 21u);
  EXPECT_EQ(MinDistance(fam.C(20), Opts()).distance, 18u);
  EXPECT_EQ(MinDistance(fam.C(18), Opts()).distance, 15u);
}

TEST(Distance, BudgetAndStrategies) {
  const CodeFamilies fam = Klein().families();
  try {
    MinDistance(fam.C(4), Opts(Strategy::kDirect));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBudgetExceeded);
  }
  // Dimension 18, dual of dimension 4: auto goes through the transform.
  const DistanceResult r = MinDistance(fam.C(4), Opts());
  EXPECT_EQ(r.strategy, Strategy::kMacWilliams);
  EXPECT_EQ(r.distance, 3u);
  EXPECT_THROW(MinDistance(fam.C(11), Opts(Strategy::kAuto, 9)), Error);
  EXPECT_EQ(ParseStrategy("direct"), Strategy::kDirect);
  EXPECT_EQ(StrategyName(Strategy::kMacWilliams), "macwilliams");
  EXPECT_THROW(ParseStrategy("fast"), Error);
}

// E(18) has dimension 18, so its distribution comes from transforming the
// enumerated distribution of C(18); transforming back must give C(18)'s.
TEST(Distance, DirectAgreesWithTransformOnC18) {
  const CodeFamilies fam = Klein().families();
  const LinearCode c18 = fam.C(18), e18 = fam.E(18);
  const WeightDistribution a = DirectWeightDistribution(c18, Opts());
  EXPECT_EQ(a, ToCppInt(testing::NaiveWeightDistribution(Klein().ring()->f(), c18.generator())));
  const WeightDistribution e = ComputeWeightDistribution(e18, Opts());
  EXPECT_EQ(MacWilliams(e, 18, 22, 8), a);
  std::size_t d = 1;
  while (a[d] == 0) ++d;
  EXPECT_EQ(MinDistance(c18, Opts(Strategy::kDirect)).distance, d);
  const DistanceResult via = MinDistance(e18, Opts());
  EXPECT_EQ(via.strategy, Strategy::kMacWilliams);
  std::size_t de = 1;
  while (e[de] == 0) ++de;
  EXPECT_EQ(via.distance, de);
}

TEST(RelativeDistance, Examples) {
  const CodeFamilies fam = Klein().families();
  const FieldPtr& f = Klein().ring()->field();
  const DistanceResult r = RelativeDistance(fam.C(17), fam.C(18), Opts());
  EXPECT_EQ(r.distance, 15u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(fam.C(17).contains(*r.witness));
  EXPECT_FALSE(fam.C(18).contains(*r.witness));
  EXPECT_EQ(HammingWeight(*r.witness), 15u);
  const LinearCode c20 = fam.C(20);
  EXPECT_EQ(RelativeDistance(c20, LinearCode::Zero(f, 22), Opts()).distance, MinDistance(c20, Opts()).distance);
  try {
    RelativeDistance(fam.C(18), fam.C(17), Opts());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotNested);
  }
}

// d(C(s-1), C(s)) >= mu(M_s) wherever the outer code is enumerable; the
// witness lies in the difference and has the reported weight.
TEST(RelativeDistance, DualBoundIsSoundOnConsecutiveCodes) {
  const CodeFamilies fam = Klein().families();
  for (std::size_t s = 15; s <= 22; ++s) {
    const LinearCode outer = fam.C(s - 1), inner = fam.C(s);
    const DistanceResult r = RelativeDistance(outer, inner, Opts());
    EXPECT_GE(r.distance, fam.mu()[s - 1]) << "s = " << s;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(outer.contains(*r.witness));
    EXPECT_FALSE(inner.contains(*r.witness));
    EXPECT_EQ(HammingWeight(*r.witness), r.distance);
  }
}

TEST(MacWilliams, ZeroCodeGivesBinomialProfile) {
  WeightDistribution zero(8, 0);
  zero[0] = 1;
  const WeightDistribution full = MacWilliams(zero, 0, 7, 8);
  boost::multiprecision::cpp_int binom = 1, pow7 = 1;
  for (unsigned w = 0; w <= 7; ++w) {
    EXPECT_EQ(full[w], binom * pow7) << w;
    binom = binom * (7 - w) / (w + 1);
    pow7 *= 7;
  }
}

TEST(MacWilliams, RejectsNonDistributions) {
  WeightDistribution bogus(5, 0);
  bogus[0] = 1;
  bogus[1] = 2;
  try {
    MacWilliams(bogus, 1, 4, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNonIntegralResult);
  }
}

// Random codes small enough that both a code and its dual can be
// enumerated: distributions, transform round trip and distances agree
// with the odometer oracle.
TEST(MacWilliams, RandomSubcodesRoundTrip) {
  const FieldPtr& f = Klein().ring()->field();
  testing::Rng rng(2026);
  for (int t = 0; t < 10; ++t) {
    const std::size_t k = 1 + rng() % 5, n = k + 1 + rng() % 5;
    const LinearCode c(f, n, testing::RandomFullRank(*f, k, n, rng));
    const LinearCode d = DualCode(c);
    const WeightDistribution a = DirectWeightDistribution(c, Opts());
    EXPECT_EQ(a, ToCppInt(testing::NaiveWeightDistribution(*f, c.generator())));
    const WeightDistribution b = MacWilliams(a, k, n, 8);
    EXPECT_EQ(b, DirectWeightDistribution(d, Opts()));
    EXPECT_EQ(MacWilliams(b, n - k, n, 8), a);
    const std::size_t naive = testing::NaiveMinDistance(*f, c.generator());
    EXPECT_EQ(MinDistance(c, Opts(Strategy::kDirect)).distance, naive);
    EXPECT_EQ(MinDistance(c, Opts(Strategy::kMacWilliams)).distance, naive);
    EXPECT_EQ(MinDistance(d, Opts(Strategy::kDirect)).distance,
              MinDistance(d, Opts(Strategy::kMacWilliams)).distance);
  }
}

TEST(RelativeDistance, MatchesOracleOnRandomNestedPairs) {
  const FieldPtr& f = Klein().ring()->field();
  testing::Rng rng(99);
  for (int t = 0; t < 10; ++t) {
    const std::size_t k = 2 + rng() % 3, n = 6 + rng() % 4, k_inner = 1 + rng() % (k - 1);
    const Matrix g = testing::RandomFullRank(*f, k, n, rng);
    std::vector<Vec> rows = g.row_list();
    const Matrix inner = Matrix::FromRows(n, {rows.begin(), rows.begin() + k_inner});
    const Matrix extra = Matrix::FromRows(n, {rows.begin() + k_inner, rows.end()});
    const LinearCode outer(f, n, g), in(f, n, inner);
    const std::size_t expect = testing::NaiveRelativeDistance(*f, inner, extra);
    EXPECT_EQ(RelativeDistance(outer, in, Opts(Strategy::kDirect)).distance, expect);
    EXPECT_EQ(RelativeDistance(outer, in, Opts(Strategy::kMacWilliams)).distance, expect);
  }
}

TEST(StarProduct, Basics) {
  const FieldSpec& f = Klein().ring()->f();
  const Vec u = {1, 2, 3, 4}, ones(4, 1), zero(4, 0);
  EXPECT_EQ(StarProduct(f, u, ones), u);
  EXPECT_EQ(StarProduct(f, u, zero), zero);
  EXPECT_EQ(StarProduct(f, u, u), (Vec{f.mul(1, 1), f.mul(2, 2), f.mul(3, 3), f.mul(4, 4)}));
  const Vec short_vec = {1};
  EXPECT_THROW(StarProduct(f, u, short_vec), Error);
}

TEST(PrimaryCode, ProvenanceAndErrors) {
  const Variety& v = Klein().variety();
  const Footprint& fp = Klein().footprint();
  const std::vector<Monomial> l = {fp[0], fp[3]};
  const LinearCode c = PrimaryCode(v, fp, l, "test");
  EXPECT_EQ(c.provenance().kind, CodeProvenance::Kind::kPrimary);
  EXPECT_EQ(c.provenance().monomials, l);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(DualVarietyCode(v, fp, l).provenance().kind, CodeProvenance::Kind::kDual);
  const std::vector<Monomial> outside = {Monomial{0, 3}};
  try {
    PrimaryCode(v, fp, outside);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMonomialOutsideFootprint);
  }
}

}  // namespace
}  // namespace varcodes
