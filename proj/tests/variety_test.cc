// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/variety.h"

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "support.h"

namespace varcodes {
namespace {

using testing::Klein;

TEST(Variety, KleinPoints) {
  const Variety& v = Klein().variety();
  ASSERT_EQ(v.size(), 22u);
  EXPECT_EQ(v[0], (Point{0, 0}));
  EXPECT_EQ(v[21], (Point{1, Klein().ring()->f().parse("a^2+a")}));
  EXPECT_EQ(v.size(), Klein().footprint().size());
  // Same set as an independent sweep.
  auto zeros = testing::BruteForceZeros(v.ring()->f(), Klein().ideal().generators);
  auto mine = v.points();
  std::sort(mine.begin(), mine.end());
  std::sort(zeros.begin(), zeros.end());
  EXPECT_EQ(mine, zeros);
}

TEST(Variety, EnumerationOrderIsLexicographic) {
  const Variety v = EnumerateVariety(Klein().ideal());
  EXPECT_TRUE(std::is_sorted(v.points().begin(), v.points().end()));
  EXPECT_EQ(v.size(), 22u);
}

TEST(Variety, OneVariableFieldEquation) {
  const std::vector<std::string> vars = {"X"};
  const RingPtr r =
      std::make_shared<PolyRing>(FieldSpec::Make(2, 3, {1, 1, 0, 1}), vars, MonomialOrder::Lex(1));
  const Variety v = EnumerateVariety(IdealSpec{r, {}, true});
  ASSERT_EQ(v.size(), 8u);
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(v[x], Point{x});
}

TEST(Variety, RejectsBadPoints) {
  const Variety& v = Klein().variety();
  const std::vector<Polynomial>& gens = Klein().ideal().generators;
  try {
    Variety(v.ring(), {{1, 1}}, gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPointNotOnVariety);
  }
  EXPECT_THROW(Variety(v.ring(), {{0, 0}, {0, 0}}, gens), Error);
  const Point off = {1, 1};
  EXPECT_THROW(v.index_of(off), Error);
  EXPECT_THROW(v.reordered({{0, 0}}), Error);
}

TEST(Evaluate, Examples) {
  const Variety& v = Klein().variety();
  const RingPtr& r = v.ring();
  EXPECT_EQ(Evaluate(v, Polynomial::Constant(r, 1)), Vec(22, 1));
  const Vec origin = Evaluate(v, Polynomial::Parse(r, "X^7 - 1"));
  EXPECT_EQ(HammingWeight(origin), 1u);
  EXPECT_NE(origin[0], 0);
  // Y times the product of X - a over all nonzero a except b.
  for (Elem b = 1; b < 8; ++b) {
    Polynomial f = Polynomial::Variable(r, 1);
    for (Elem a = 1; a < 8; ++a) {
      if (a != b) f = f * (Polynomial::Variable(r, 0) - Polynomial::Constant(r, a));
    }
    EXPECT_EQ(HammingWeight(Evaluate(v, f)), 3u) << "b = " << b;
  }
}

TEST(Evaluate, MonomialMatrixHasFullRank) {
  const Variety& v = Klein().variety();
  const Matrix m = EvaluationMatrix(v, Klein().footprint().monomials());
  EXPECT_EQ(Rank(v.ring()->f(), m), 22u);
  for (std::size_t i = 0; i < 22; ++i) {
    EXPECT_EQ(m.row_vec(i), EvaluateMonomial(v, Klein().footprint()[i]));
  }
}

TEST(Evaluate, IsARingHomomorphism) {
  const Variety& v = Klein().variety();
  const GroebnerBasis& gb = Klein().groebner();
  const FieldSpec& f = v.ring()->f();
  testing::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const Polynomial a = testing::RandomFootprintPoly(Klein().footprint(), rng),
                     b = testing::RandomFootprintPoly(Klein().footprint(), rng);
    EXPECT_EQ(Evaluate(v, a * b), StarProduct(f, Evaluate(v, a), Evaluate(v, b)));
    EXPECT_EQ(Evaluate(v, gb.normal_form(a * b)), Evaluate(v, a * b));
    EXPECT_EQ(Evaluate(v, a + b), [&] {
      Vec s = Evaluate(v, a);
      const Vec e = Evaluate(v, b);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = f.add(s[i], e[i]);
      return s;
    }());
  }
}

TEST(Lagrange, StandardVectorsAndPartitionOfUnity) {
  const Variety& v = Klein().variety();
  const GroebnerBasis& gb = Klein().groebner();
  const Footprint& fp = Klein().footprint();
  Polynomial sum(v.ring());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Polynomial l = LagrangeReduced(v, gb, i);
    Vec e(22, 0);
    e[i] = 1;
    EXPECT_EQ(Evaluate(v, l), e) << i;
    for (const Term& t : l.terms()) EXPECT_TRUE(fp.contains(t.monomial));
    // Omitting absent coordinate values changes nothing.
    EXPECT_EQ(LagrangeReduced(v, gb, i, false), l);
    EXPECT_EQ(LagrangeReduced(v, gb, v[i]), l);
    sum = sum + l;
  }
  EXPECT_EQ(sum, Polynomial::Constant(v.ring(), 1));
  const Point off = {1, 1};
  EXPECT_THROW(LagrangeReduced(v, gb, off), Error);
}

TEST(Interpolate, RecoversNormalForms) {
  const Variety& v = Klein().variety();
  const GroebnerBasis& gb = Klein().groebner();
  const Interpolator interp(v, gb);
  testing::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Polynomial f = testing::RandomDensePoly(v.ring(), 14, 7, rng);
    EXPECT_EQ(interp.interpolate(Evaluate(v, f)), gb.normal_form(f));
  }
  EXPECT_TRUE(Interpolate(v, gb, Vec(22, 0)).is_zero());
  try {
    Interpolate(v, gb, Vec(21, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kLengthMismatch);
  }
}

TEST(PointsCsv, RoundTrip) {
  const Variety& v = Klein().variety();
  std::stringstream ss;
  WritePointsCsv(ss, v);
  EXPECT_EQ(ReadPointsCsv(ss, *v.ring()), v.points());
  std::istringstream symbolic("# comment\nX,Y\na,a\n0,0\n");
  const auto pts = ReadPointsCsv(symbolic, *v.ring());
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (Point{2, 2}));
  std::istringstream bad("X,Y\n1\n");
  EXPECT_THROW(ReadPointsCsv(bad, *v.ring()), Error);
}

}  // namespace
}  // namespace varcodes
