// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/groebner.h"

#include <gtest/gtest.h>

#include "support.h"
#include "varcodes/variety.h"

namespace varcodes {
namespace {

using testing::Klein;

RingPtr Ring(const std::string& order = "w:2,3") {
  const std::vector<std::string> vars = {"X", "Y"};
  return std::make_shared<PolyRing>(FieldSpec::Make(2, 3, {1, 1, 0, 1}), vars,
                                    MonomialOrder::Parse(order, vars));
}

IdealSpec KleinIdeal(const RingPtr& r) { return {r, {Polynomial::Parse(r, "Y^3 + X^3*Y + X")}, true}; }

TEST(Buchberger, KleinBasis) {
  const RingPtr r = Ring();
  const GroebnerBasis gb = Buchberger(KleinIdeal(r));
  ASSERT_EQ(gb.size(), 3u);
  EXPECT_EQ(gb.polynomials()[0], Polynomial::Parse(r, "Y^3 + X^3*Y + X"));
  EXPECT_EQ(gb.polynomials()[1], Polynomial::Parse(r, "X^8 + X"));
  EXPECT_EQ(gb.polynomials()[2], Polynomial::Parse(r, "X^7*Y + Y"));
  EXPECT_TRUE(IsReduced(gb));
  EXPECT_TRUE(SatisfiesBuchbergerCriterion(gb));
}

TEST(Buchberger, FieldEquationsAlone) {
  const RingPtr r = Ring();
  const GroebnerBasis gb = Buchberger(IdealSpec{r, {}, true});
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.polynomials()[0], Polynomial::Parse(r, "X^8 + X"));
  EXPECT_EQ(gb.polynomials()[1], Polynomial::Parse(r, "Y^8 + Y"));
  EXPECT_EQ(ComputeFootprint(gb).size(), 64u);
}

TEST(Buchberger, BinomialWitnessHasSevenCommonRoots) {
  const RingPtr r = Ring();
  IdealSpec ideal = KleinIdeal(r);
  ideal.generators.push_back(Polynomial::Parse(r, "a*X^2*Y + 1"));
  const GroebnerBasis gb = Buchberger(ideal);
  EXPECT_EQ(ComputeFootprint(gb).size(), 7u);
  const auto roots = testing::BruteForceZeros(r->f(), ideal.generators);
  EXPECT_EQ(roots.size(), 7u);
}

TEST(Buchberger, UnitIdeal) {
  const RingPtr r = Ring();
  IdealSpec ideal = KleinIdeal(r);
  ideal.generators.push_back(Polynomial::Parse(r, "X^2 + X + 1"));  // no roots in GF(8)
  const GroebnerBasis gb = Buchberger(ideal);
  EXPECT_TRUE(gb.is_unit_ideal());
  EXPECT_EQ(ComputeFootprint(gb).size(), 0u);
}

TEST(Buchberger, OtherOrdersStillCountPoints) {
  for (const std::string order : {"lex", "grlex", "lex@Y,X", "w:3,2"}) {
    const RingPtr r = Ring(order);
    const GroebnerBasis gb = Buchberger(KleinIdeal(r));
    EXPECT_TRUE(IsReduced(gb)) << order;
    EXPECT_TRUE(SatisfiesBuchbergerCriterion(gb)) << order;
    EXPECT_EQ(ComputeFootprint(gb).size(), 22u) << order;
  }
}

TEST(Buchberger, InfiniteFootprint) {
  const RingPtr r = Ring();
  const GroebnerBasis gb = Buchberger(IdealSpec{r, {Polynomial::Parse(r, "X^3 + Y")}, false});
  try {
    ComputeFootprint(gb);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInfiniteFootprint);
  }
}

TEST(NormalForm, Examples) {
  const GroebnerBasis& gb = Klein().groebner();
  const RingPtr& r = gb.ring();
  EXPECT_EQ(gb.normal_form(Polynomial::Parse(r, "Y^3")), Polynomial::Parse(r, "X^3*Y + X"));
  for (const auto& h : gb.polynomials()) EXPECT_TRUE(gb.normal_form(h).is_zero());
  EXPECT_EQ(gb.normal_form(Polynomial::Parse(r, "X^9")), Polynomial::Parse(r, "X^2"));
}

TEST(NormalForm, IdempotentLinearAndInFootprint) {
  const GroebnerBasis& gb = Klein().groebner();
  const Footprint& fp = Klein().footprint();
  const RingPtr& r = gb.ring();
  testing::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const Polynomial f = testing::RandomDensePoly(r, 12, 6, rng), g = testing::RandomDensePoly(r, 12, 6, rng);
    const Elem c = testing::RandomElem(r->f(), rng);
    const Polynomial nf = gb.normal_form(f);
    EXPECT_EQ(gb.normal_form(nf), nf);
    EXPECT_EQ(gb.normal_form(f + g.scale(c)), nf + gb.normal_form(g).scale(c));
    for (const Term& term : nf.terms()) EXPECT_TRUE(fp.contains(term.monomial));
    // Same function on the curve.
    for (const Point& p : Klein().variety().points()) EXPECT_EQ(nf.evaluate(p), f.evaluate(p));
  }
}

TEST(Footprint, KleinStaircase) {
  const Footprint& fp = Klein().footprint();
  ASSERT_EQ(fp.size(), 22u);
  const char* expected[] = {"1",     "X",       "Y",     "X^2",     "X*Y",     "X^3",     "Y^2",     "X^2*Y",
                            "X^4",   "X*Y^2",   "X^3*Y", "X^5",     "X^2*Y^2", "X^4*Y",   "X^6",     "X^3*Y^2",
                            "X^5*Y", "X^7",     "X^4*Y^2", "X^6*Y", "X^5*Y^2", "X^6*Y^2"};
  for (std::size_t i = 0; i < 22; ++i) EXPECT_EQ(fp.ring()->format(fp[i]), expected[i]) << i;
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; j <= 2; ++j) EXPECT_TRUE(fp.contains(Monomial{i, j}));
  EXPECT_TRUE(fp.contains(Monomial{7, 0}));
  EXPECT_FALSE(fp.contains(Monomial{7, 1}));
  EXPECT_FALSE(fp.contains(Monomial{0, 3}));
}

TEST(Footprint, DivisorClosedAndMatchesVariety) {
  const Footprint& fp = Klein().footprint();
  for (const Monomial& n : fp.monomials()) {
    for (unsigned i = 0; i <= n[0]; ++i)
      for (unsigned j = 0; j <= n[1]; ++j) EXPECT_TRUE(fp.contains(Monomial{i, j}));
  }
  const auto zeros = testing::BruteForceZeros(fp.ring()->f(), Klein().ideal().generators);
  EXPECT_EQ(zeros.size(), fp.size());
  EXPECT_THROW(fp.require_index(Monomial{0, 3}), Error);
}

// #Delta(I_q + <F>) is the number of curve points where F vanishes.
TEST(Footprint, AugmentedIdealCountsCommonRoots) {
  const GroebnerBasis& gb = Klein().groebner();
  const Footprint& fp = Klein().footprint();
  testing::Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const Polynomial f = testing::RandomFootprintPoly(fp, rng, 0.15);
    std::vector<Polynomial> gens = Klein().ideal().generators;
    gens.push_back(f);
    const std::size_t roots = testing::BruteForceZeros(gb.ring()->f(), gens).size();
    const std::vector<Polynomial> extra = {f};
    EXPECT_EQ(ComputeFootprint(ExtendBasis(gb, extra)).size(), roots);
    IdealSpec fresh = Klein().ideal();
    fresh.generators.push_back(f);
    EXPECT_EQ(ComputeFootprint(Buchberger(fresh)).size(), roots);
  }
}

TEST(SPolynomial, CancelsLeadingTerms) {
  const RingPtr r = Ring();
  const Polynomial f = Polynomial::Parse(r, "X^2*Y + X"), g = Polynomial::Parse(r, "X*Y^2 + 1");
  EXPECT_EQ(SPolynomial(f, g), Polynomial::Parse(r, "X*Y + X"));
}

}  // namespace
}  // namespace varcodes
