// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/dual_basis.h"

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "support.h"

namespace varcodes {
namespace {

using testing::Klein;

// F_i^perp for F_i = M_i, i = 1..22.
const char* const kDualOfMonomial[] = {
    "X^7 + 1", "X^6",     "X^6*Y^2", "X^5",     "X^5*Y^2", "X^4",   "X^6*Y", "X^4*Y^2",
    "X^3",     "X^5*Y",   "X^3*Y^2", "X^2",     "X^4*Y",   "X^2*Y^2", "X",   "X^3*Y",
    "X*Y^2",   "1",       "X^2*Y",   "Y^2",     "X*Y",     "Y"};

const DualBasis& KleinDual() {
  static const DualBasis db = ComputeDualBasis(Klein().variety(), Klein().groebner(), Klein().footprint());
  return db;
}

TEST(DualBasis, KleinTable) {
  const DualBasis& db = KleinDual();
  ASSERT_EQ(db.dual.size(), 22u);
  for (std::size_t i = 0; i < 22; ++i) {
    EXPECT_EQ(db.basis[i], Polynomial::FromMonomial(Klein().ring(), Klein().footprint()[i]));
    EXPECT_EQ(db.dual[i], Polynomial::Parse(Klein().ring(), kDualOfMonomial[i])) << "i = " << i + 1;
  }
}

TEST(DualBasis, BiorthogonalAndInverse) {
  const DualBasis& db = KleinDual();
  const Variety& v = Klein().variety();
  const FieldSpec& f = Klein().ring()->f();
  EXPECT_TRUE(CheckBiorthogonal(v, db));
  for (std::size_t i = 0; i < 22; ++i) {
    for (std::size_t j = 0; j < 22; ++j) {
      Elem s = 0;
      for (const Point& p : v.points()) s = f.add(s, f.mul(db.basis[i].evaluate(p), db.dual[j].evaluate(p)));
      EXPECT_EQ(s, i == j ? 1 : 0) << i << "," << j;
    }
  }
  EXPECT_EQ(Multiply(f, db.b, db.b_inv), Matrix::Identity(22));
  EXPECT_EQ(Multiply(f, db.b_inv, db.b), Matrix::Identity(22));
}

TEST(DualBasis, InterpolationRoundTrip) {
  const DualBasis& db = KleinDual();
  const Variety& v = Klein().variety();
  for (std::size_t j = 0; j < 22; ++j) {
    EXPECT_EQ(Interpolate(v, Klein().groebner(), db.b_inv.col_vec(j)), db.dual[j]);
    EXPECT_EQ(Interpolate(v, Klein().groebner(), Evaluate(v, db.dual[j])), db.dual[j]);
  }
  EXPECT_EQ(Interpolate(v, Klein().groebner(), db.b_inv.col_vec(0)), Polynomial::Parse(Klein().ring(), "X^7 + 1"));
}

// The pairing sums over all points, so the order of the points is irrelevant.
TEST(DualBasis, IndependentOfPointOrder) {
  testing::Rng rng(8);
  for (int t = 0; t < 3; ++t) {
    std::vector<Point> pts = Klein().variety().points();
    std::shuffle(pts.begin(), pts.end(), rng);
    const Variety shuffled = Klein().variety().reordered(pts);
    const DualBasis db = ComputeDualBasis(shuffled, Klein().groebner(), Klein().footprint());
    EXPECT_EQ(db.dual, KleinDual().dual);
  }
}

TEST(DualBasis, OtherBases) {
  // Any invertible change of the monomial basis works; F_i = M_i + M_1 for i > 1.
  const Footprint& fp = Klein().footprint();
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < 22; ++i) {
    Polynomial p = Polynomial::FromMonomial(Klein().ring(), fp[i]);
    if (i > 0) p = p + Polynomial::Constant(Klein().ring(), 1);
    basis.push_back(p);
  }
  const DualBasis db = ComputeDualBasis(Klein().variety(), Klein().groebner(), basis);
  EXPECT_TRUE(CheckBiorthogonal(Klein().variety(), db));
  std::vector<Polynomial> singular = basis;
  singular[3] = singular[2];
  try {
    ComputeDualBasis(Klein().variety(), Klein().groebner(), singular);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSingularMatrix);
  }
}

TEST(PrimaryDescription, Examples) {
  const DualBasis& db = KleinDual();
  const Variety& v = Klein().variety();
  const CodeFamilies fam = Klein().families();
  const LinearCode c6 = PrimaryDescriptionOfDual(v, db, fam.first(6));
  EXPECT_EQ(c6.dimension(), 16u);
  EXPECT_TRUE(c6.same_code(DualCode(fam.E(6))));
  EXPECT_EQ(PrimaryDescriptionOfDual(v, db, fam.all()).dimension(), 0u);
  EXPECT_EQ(PrimaryDescriptionOfDual(v, db, {}).dimension(), 22u);
}

// (span{b_i : i in S})^perp = span{b_j^perp : j not in S}.
TEST(PrimaryDescription, RandomIndexSets) {
  const DualBasis& db = KleinDual();
  const Variety& v = Klein().variety();
  const FieldPtr& f = Klein().ring()->field();
  testing::Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    IndexSet s;
    for (std::size_t i = 0; i < 22; ++i) {
      if (rng() % 2) s.push_back(i);
    }
    std::vector<Vec> rows;
    for (std::size_t i : s) rows.push_back(db.b.row_vec(i));
    const LinearCode span(f, 22, Matrix::FromRows(22, rows));
    EXPECT_TRUE(DualCode(span).same_code(PrimaryDescriptionOfDual(v, db, s)));
  }
}

TEST(DualBasis, Serialization) {
  std::ostringstream csv, table;
  WriteDualBasisCsv(csv, KleinDual());
  WriteDualBasisTable(table, KleinDual());
  EXPECT_NE(csv.str().find("1,1,X^7 + 1\n"), std::string::npos);
  EXPECT_NE(csv.str().find("22,X^6*Y^2,Y\n"), std::string::npos);
  EXPECT_NE(table.str().find("X^7 + 1"), std::string::npos);
}

}  // namespace
}  // namespace varcodes
