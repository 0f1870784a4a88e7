// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/css.h"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support.h"

namespace varcodes {
namespace {

using testing::Klein;

CSSParams Params(const std::string& c1, const std::string& c2) {
  return ComputeCSSParams(Klein().families(), CodeRef::Parse(c1), CodeRef::Parse(c2));
}

struct Row {
  unsigned ell, dz, dx;
};

// (l, dZ, dX) of the shipped pair list, in order.
const Row kTable[] = {{1, 22, 1}, {1, 19, 2}, {1, 15, 4}, {1, 9, 8},  {2, 15, 3}, {2, 11, 5},
                      {3, 12, 4}, {3, 10, 6}, {3, 8, 7},  {4, 13, 3}, {5, 10, 4}, {7, 6, 6},
                      {11, 6, 3}, {12, 4, 4}, {14, 4, 3}, {15, 3, 3}, {19, 2, 2}};

TEST(CodeRef, ParseAndFormat) {
  EXPECT_EQ(CodeRef::Parse("E:5").to_string(), "E(5)");
  EXPECT_EQ(CodeRef::Parse("E(5)"), CodeRef::Parse("E:5"));
  EXPECT_EQ(CodeRef::Parse(" dual( Ct:4 ) ").to_string(), "dual(Ct(4))");
  EXPECT_EQ(CodeRef::Parse("dual(dual(C:3))"), CodeRef::Parse("C:3"));
  EXPECT_EQ(CodeRef::Parse("zero").to_string(), "{0}");
  EXPECT_EQ(CodeRef::Parse("{0}").family, CodeRef::Family::kZero);
  EXPECT_EQ(CodeRef::Parse("full").family, CodeRef::Family::kFull);
  EXPECT_THROW(CodeRef::Parse("F:3"), Error);
  EXPECT_THROW(CodeRef::Parse("E:"), Error);
}

TEST(CodeRef, ResolveMatchesFamilies) {
  const CodeFamilies fam = Klein().families();
  EXPECT_TRUE(Build(fam, CodeRef::Parse("E:7")).same_code(fam.E(7)));
  EXPECT_TRUE(Build(fam, CodeRef::Parse("Et:5")).same_code(fam.Et(5)));
  EXPECT_TRUE(Build(fam, CodeRef::Parse("C:7")).same_code(fam.C(7)));
  EXPECT_TRUE(Build(fam, CodeRef::Parse("Ct:4")).same_code(fam.Ct(4)));
  EXPECT_TRUE(Build(fam, CodeRef::Parse("dual(Ct:4)")).same_code(DualCode(fam.Ct(4))));
  EXPECT_EQ(Build(fam, CodeRef::Parse("zero")).dimension(), 0u);
  EXPECT_EQ(Build(fam, CodeRef::Parse("full")).dimension(), 22u);
}

TEST(CSSParams, Examples) {
  const CSSParams a = Params("Et:3", "E:3");
  EXPECT_EQ(a.to_string(8), "[[22,15,3/3]]_8");
  EXPECT_EQ(Params("E:1", "zero").to_string(8), "[[22,1,22/1]]_8");
  EXPECT_EQ(Params("E:17", "E:3").to_string(8), "[[22,14,4/3]]_8");
  EXPECT_EQ(Params("Et:3", "dual(Ct:4)").to_string(8), "[[22,13,4/3]]_8");
  EXPECT_EQ(Params("E:10", "E:7").to_string(8), "[[22,3,10/6]]_8");
  EXPECT_EQ(Params("Et:2", "E:1").to_string(8), "[[22,19,2/2]]_8");
}

TEST(CSSParams, Errors) {
  try {
    Params("E:3", "E:5");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotNested);
  }
  EXPECT_THROW(Params("E:3", "E:3"), Error);
  try {
    Params("E:10", "C:15");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnsupported);
  }
}

TEST(CSSTable, ShippedPairs) {
  const CodeFamilies fam = Klein().families();
  const auto table = EnumerateCSSTable(fam, Klein().pairs());
  ASSERT_EQ(table.size(), std::size(kTable));
  for (std::size_t i = 0; i < table.size(); ++i) {
    const CSSParams& p = table[i];
    EXPECT_EQ(p.ell, kTable[i].ell) << i;
    EXPECT_EQ(p.dz, kTable[i].dz) << i;
    EXPECT_EQ(p.dx, kTable[i].dx) << i;
    EXPECT_FALSE(p.g1.has_value());
    // l from the generator matrices.
    const LinearCode c1 = Build(fam, p.c1), c2 = Build(fam, p.c2);
    EXPECT_TRUE(c1.contains(c2));
    EXPECT_EQ(p.ell, c1.dimension() - c2.dimension()) << i;
  }
  EXPECT_TRUE(EnumerateCSSTable(fam, {}).empty());
}

// Exchanging (C1, C2) for (C2^perp, C1^perp) swaps the roles of dZ and dX.
TEST(CSSTable, SwapSymmetry) {
  for (const CSSPair& pair : Klein().pairs()) {
    const CSSParams p = ComputeCSSParams(Klein().families(), pair.c1, pair.c2);
    CodeRef d1 = pair.c2, d2 = pair.c1;
    d1.dual = !d1.dual;
    d2.dual = !d2.dual;
    const CSSParams q = ComputeCSSParams(Klein().families(), d1, d2);
    EXPECT_EQ(q.ell, p.ell);
    EXPECT_EQ(q.dz, p.dz);
    EXPECT_EQ(q.dx, p.dx);
    if (p.dz != p.dx) {
      EXPECT_NE(q.swapped, p.swapped) << pair.c1.to_string();
    }
  }
}

// Bounds never exceed exact relative distances, where those can be enumerated.
TEST(CSSTable, BoundsAreSound) {
  const CodeFamilies fam = Klein().families();
  EnumerationOptions o;
  o.budget = 7;
  std::size_t checked = 0;
  for (const CSSPair& pair : Klein().pairs()) {
    const CSSParams p = ComputeCSSParams(fam, pair.c1, pair.c2);
    const unsigned z_bound = p.swapped ? p.dx : p.dz, x_bound = p.swapped ? p.dz : p.dx;
    const LinearCode c1 = Build(fam, pair.c1), c2 = Build(fam, pair.c2);
    try {
      EXPECT_GE(RelativeDistance(c1, c2, o).distance, z_bound) << pair.c1.to_string();
      EXPECT_GE(RelativeDistance(DualCode(c2), DualCode(c1), o).distance, x_bound) << pair.c1.to_string();
      ++checked;
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
    }
  }
  EXPECT_GE(checked, 8u);
}

TEST(Purity, Examples) {
  const CodeFamilies fam = Klein().families();
  EnumerationOptions o;
  o.budget = 9;
  const PurityReport a = PurityCheck(fam, CodeRef::Parse("E:5"), CodeRef::Parse("E:4"), o);
  EXPECT_EQ(a.verdict, Purity::kImpure);
  EXPECT_EQ(a.d_c2perp, 3u);
  const PurityReport b = PurityCheck(fam, CodeRef::Parse("C:18"), CodeRef::Parse("C:19"), o);
  EXPECT_EQ(b.verdict, Purity::kImpure);
  EXPECT_EQ(b.d_c2perp, 1u);
  const PurityReport c = PurityCheck(fam, CodeRef::Parse("E:1"), CodeRef::Parse("zero"), o);
  EXPECT_EQ(c.verdict, Purity::kPure);
  EXPECT_EQ(PurityName(Purity::kUnknown), "unknown");
  EnumerationOptions tiny;
  tiny.budget = 2;
  EXPECT_EQ(PurityCheck(fam, CodeRef::Parse("E:11"), CodeRef::Parse("E:10"), tiny).verdict, Purity::kUnknown);
}

TEST(BestKnown, ParseValidateAndGaps) {
  // A maximum distance separable profile d = n - k + 1 for n = 22.
  std::ostringstream csv;
  csv << "n,k,d\n# comment\n";
  for (int k = 1; k <= 22; ++k) csv << "22," << k << "," << 23 - k << "\n";
  std::istringstream in(csv.str());
  const BestKnownTable best = BestKnownTable::Parse(in);
  EXPECT_EQ(best.best(22, 5), 18u);
  EXPECT_FALSE(best.best(21, 5).has_value());
  EXPECT_EQ(best.largest_dimension(22, 4), 19u);
  CSSParams p = Params("E:5", "E:4");
  FillGaps(p, best);
  ASSERT_TRUE(p.g1 && p.g2);
  EXPECT_EQ(*p.g1, 4);  // k1 = 19, k2perp = 4, deltaZ = 19
  EXPECT_EQ(*p.g2, 4);  // k1 = 8, k2perp = 15, deltaX = 8
  const auto table = EnumerateCSSTable(Klein().families(), Klein().pairs(), &best);
  for (const auto& row : table) EXPECT_TRUE(row.g1.has_value());

  std::istringstream rising("22,1,5\n22,2,6\n");
  try {
    BestKnownTable::Parse(rising);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidBundle);
  }
  std::istringstream garbage("22,x\n");
  EXPECT_THROW(BestKnownTable::Parse(garbage), Error);
}

TEST(Pairs, LoadFromFile) {
  const std::string dir = testing::MakeTempDir("pairs");
  const std::string path = dir + "/pairs.toml";
  {
    std::ofstream out(path);
    out << "[[pair]]\nc1 = \"E:5\"\nc2 = \"E:4\"\n[[pair]]\nc1 = \"Et:3\"\nc2 = \"dual(Ct:4)\"\n";
  }
  const auto pairs = LoadPairs(path);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].c2.to_string(), "dual(Ct(4))");
  {
    std::ofstream out(path);
    out << "[[pair]]\nc1 = \"E:5\"\n";
  }
  EXPECT_THROW(LoadPairs(path), Error);
}

}  // namespace
}  // namespace varcodes
