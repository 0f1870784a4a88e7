// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/bundle.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support.h"

namespace varcodes {
namespace {

namespace fs = std::filesystem;
using testing::Klein;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Copy of the shipped bundle that a test may corrupt.
fs::path CopyKlein() {
  const fs::path dir = testing::MakeTempDir("bundle");
  fs::copy(ResolveBundlePath("klein").parent_path(), dir, fs::copy_options::recursive);
  return dir;
}

void Replace(const fs::path& file, const std::string& from, const std::string& to) {
  std::string s = Slurp(file);
  const auto pos = s.find(from);
  ASSERT_NE(pos, std::string::npos) << from;
  s.replace(pos, from.size(), to);
  std::ofstream(file) << s;
}

Errc LoadError(const fs::path& bundle_toml) {
  try {
    InstanceBundle::Load(bundle_toml);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kUnsupported;
}

TEST(Bundle, LoadsKlein) {
  const InstanceBundle& b = Klein();
  EXPECT_EQ(b.name(), "klein");
  EXPECT_EQ(b.footprint().size(), 22u);
  EXPECT_EQ(b.tables().size(), 8u);
  EXPECT_EQ(b.pairs().size(), 17u);
  EXPECT_EQ(b.witnesses().size(), 5u);
  EXPECT_EQ(b.overrides().size(), 1u);
  EXPECT_EQ(b.prior_ctilde().size(), 14u);
  EXPECT_NE(b.table_for(b.ring()->parse_monomial("X^3*Y^2")), nullptr);
  EXPECT_EQ(b.table_for(b.ring()->parse_monomial("X^7")), nullptr);
}

TEST(Bundle, ResolvePath) {
  const fs::path p = ResolveBundlePath("klein");
  EXPECT_EQ(p.filename(), "bundle.toml");
  EXPECT_EQ(ResolveBundlePath(p.parent_path().string()), p);
  EXPECT_EQ(ResolveBundlePath(p.string()), p);
  try {
    ResolveBundlePath("no-such-bundle");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kIo);
  }
}

TEST(Bundle, IdealFileWithOrderOverride) {
  const IdealFile f = LoadIdealFile(ResolveBundlePath("klein"), "lex");
  EXPECT_EQ(f.ideal.ring->order().kind(), MonomialOrder::Kind::kLex);
  EXPECT_TRUE(f.points.has_value());
  EXPECT_EQ(ComputeFootprint(Buchberger(f.ideal)).size(), 22u);
}

TEST(Bundle, EmptyBundleIsInvalid) {
  const fs::path dir = testing::MakeTempDir("empty");
  std::ofstream(dir / "bundle.toml") << "";
  EXPECT_EQ(LoadError(dir / "bundle.toml"), Errc::kInvalidBundle);
}

TEST(Bundle, DetectsInconsistentData) {
  {
    const fs::path dir = CopyKlein();
    Replace(dir / "points.csv", "1,5\n", "");
    EXPECT_EQ(LoadError(dir / "bundle.toml"), Errc::kInvalidBundle);
  }
  {
    const fs::path dir = CopyKlein();
    Replace(dir / "points.csv", "1,5\n", "1,1\n");
    EXPECT_NE(LoadError(dir / "bundle.toml"), Errc::kUnsupported);
  }
  {
    const fs::path dir = CopyKlein();
    Replace(dir / "lambda.toml", "\"Y\"", "\"Y^2\"");
    EXPECT_EQ(LoadError(dir / "bundle.toml"), Errc::kInvalidBundle);
  }
  {
    const fs::path dir = CopyKlein();
    // Y has fewer coefficients below it than X*Y, so a3 is out of range.
    Replace(dir / "tables" / "table2.txt", "leading: X*Y", "leading: Y");
    EXPECT_EQ(LoadError(dir / "bundle.toml"), Errc::kSyntaxError);
  }
  {
    const fs::path dir = CopyKlein();
    fs::remove(dir / "witnesses.toml");
    EXPECT_EQ(LoadError(dir / "bundle.toml"), Errc::kIo);
  }
}

TEST(Reproduce, EveryTargetMatchesGolden) {
  const fs::path out = testing::MakeTempDir("reproduce");
  for (const std::string& target : ReproduceTargets()) {
    const ReproduceResult r = Reproduce(Klein(), target, out);
    EXPECT_TRUE(r.golden_found) << target;
    EXPECT_TRUE(r.diff.empty()) << target << ": first difference at line "
                                << (r.diff.empty() ? 0 : r.diff[0].line);
    EXPECT_EQ(Slurp(out / (target + ".txt")), r.artifact);
    // Deterministic.
    EXPECT_EQ(RenderArtifact(Klein(), target), r.artifact);
  }
  EXPECT_THROW(RenderArtifact(Klein(), "figure-3"), Error);
}

TEST(Reproduce, MismatchIsReported) {
  const fs::path dir = CopyKlein();
  Replace(dir / "golden" / "sigma-figure.txt", "22 19 16", "22 19 17");
  const auto b = InstanceBundle::Load(dir / "bundle.toml");
  const ReproduceResult r = Reproduce(*b, "sigma-figure");
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.diff.size(), 1u);
  EXPECT_EQ(r.diff[0].expected, "22 19 17 13 10 7 4 1");
  try {
    RequireReproduced({r});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMismatchReport);
  }
  RequireReproduced({Reproduce(*b, "groebner")});
}

TEST(Reproduce, TextHelpers) {
  EXPECT_EQ(StripLicenseHeader("# Copyright 2026 x\n# SPDX-License-Identifier: y\n\nbody\n"), "body\n");
  EXPECT_EQ(StripLicenseHeader("body\n"), "body\n");
  const auto d = DiffText("a\nb\nc\n", "a\nB\n");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].line, 2u);
  EXPECT_EQ(d[0].actual, "B");
  EXPECT_EQ(d[1].expected, "c");
  EXPECT_EQ(d[1].actual, "");
  EXPECT_TRUE(DiffText("x\n", "x\n").empty());
}

TEST(Witnesses, WeightsAndMembership) {
  const std::vector<std::size_t> weights = {3, 8, 12, 15, 1};
  ASSERT_EQ(Klein().witnesses().size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Witness& w = Klein().witnesses()[i];
    const WitnessResult r = CheckWitness(Klein(), w);
    EXPECT_EQ(r.weight, weights[i]) << w.name;
    EXPECT_TRUE(r.in) << w.name;
    EXPECT_TRUE(r.not_in) << w.name;
  }
}

// Y (X + Y + a) times three vertical lines: weight 8, in C(10) but not C(11).
TEST(Witnesses, LineProductFromScratch) {
  const CodeFamilies fam = Klein().families();
  const RingPtr& r = Klein().ring();
  const Polynomial f = Polynomial::Parse(r, "Y*(X+Y+a)*(X+a)*(X+a^2+a)*(X+a^2+a+1)");
  const Vec c = Evaluate(Klein().variety(), f);
  EXPECT_EQ(HammingWeight(c), 8u);
  EXPECT_TRUE(fam.C(10).contains(c));
  EXPECT_FALSE(fam.C(11).contains(c));
}

}  // namespace
}  // namespace varcodes
