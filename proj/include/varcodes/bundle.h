// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// An instance bundle: field, ring, ideal, point order, case tables and the
// remaining data needed to regenerate the published artifacts, loaded from
// a bundle.toml. Reproduction renders each artifact and diffs it against a
// committed golden file.

#ifndef VARCODES_BUNDLE_H_
#define VARCODES_BUNDLE_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varcodes/css.h"
#include "varcodes/dual_basis.h"

namespace varcodes {

struct LambdaEntry {
  Monomial monomial;
  std::vector<Monomial> extras;
};

struct PriorParams {
  std::size_t n = 0, k = 0;
  unsigned d = 0;
  bool refined = false;
};

struct Witness {
  std::string name;
  Polynomial polynomial;
  CodeRef in;
  std::optional<CodeRef> not_in;
};

// The [field], [ring] and [ideal] tables of a bundle or standalone ideal
// file:
//   [field]  p = 2, m = 3, modulus = [1, 1, 0, 1]   (c_m first)
//   [ring]   variables = ["X", "Y"], order = "w:2,3"
//   [ideal]  generators = ["Y^3 + X^3*Y + X"], field_equations = true
// plus [files] points = "points.csv" when present.
struct IdealFile {
  IdealSpec ideal;
  std::optional<std::filesystem::path> points;
};
// A non-empty `order_override` replaces [ring] order.
IdealFile LoadIdealFile(const std::filesystem::path& path, const std::string& order_override = "");

// A bundle.toml path, a directory holding one, or a bare name looked up
// under $VARCODES_DATA_DIR (default: the source tree's data/). Throws
// Error{kIo}.
std::filesystem::path ResolveBundlePath(const std::string& name_or_path);

class InstanceBundle {
 public:
  // Throws Error{kInvalidBundle} for missing or inconsistent data and
  // Error{kIo, kSyntaxError} for unreadable files.
  static std::unique_ptr<InstanceBundle> Load(const std::filesystem::path& bundle_toml);

  InstanceBundle(const InstanceBundle&) = delete;
  InstanceBundle& operator=(const InstanceBundle&) = delete;

  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ideal_.ring; }
  const IdealSpec& ideal() const { return ideal_; }
  const GroebnerBasis& groebner() const { return *gb_; }
  const Footprint& footprint() const { return *fp_; }
  const Variety& variety() const { return *variety_; }
  const std::vector<CaseTable>& tables() const { return tables_; }
  const std::vector<LambdaEntry>& lambda() const { return lambda_; }
  const std::vector<MuOverride>& overrides() const { return overrides_; }
  const std::vector<CSSPair>& pairs() const { return pairs_; }
  const std::vector<PriorParams>& prior_ctilde() const { return prior_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::filesystem::path& golden_dir() const { return golden_; }

  const std::vector<BoundEntry>& sigma() const { return sigma_; }
  const std::vector<BoundEntry>& mu() const { return mu_; }
  // Tables are looked up by the leading monomial; nullptr when absent.
  const CaseTable* table_for(const Monomial& leading) const;
  // Valid while the bundle lives.
  CodeFamilies families() const;

 private:
  InstanceBundle() = default;

  std::string name_;
  IdealSpec ideal_;
  std::optional<GroebnerBasis> gb_;
  std::optional<Footprint> fp_;
  std::optional<Variety> variety_;
  std::vector<CaseTable> tables_;
  std::vector<LambdaEntry> lambda_;
  std::vector<MuOverride> overrides_;
  std::vector<CSSPair> pairs_;
  std::vector<PriorParams> prior_;
  std::vector<Witness> witnesses_;
  std::filesystem::path golden_;
  std::vector<BoundEntry> sigma_, mu_;
};

// Reproduction targets, in the order `reproduce --all` runs them.
const std::vector<std::string>& ReproduceTargets();

// Renders one artifact. Throws Error{kIndexOutOfRange} for an unknown target.
std::string RenderArtifact(const InstanceBundle& b, const std::string& target);

// Individual renderers, also used by the CLI.
std::string RenderGroebner(const GroebnerBasis& gb);
std::string RenderFootprint(const Footprint& fp);
// Values laid out as the footprint grid (rows by the last variable's
// exponent, highest first) for two variables, one per line otherwise.
// Entries with an override are marked with '*'.
std::string RenderBoundFigure(const Footprint& fp, const std::vector<BoundEntry>& entries,
                              const std::string& title);
std::string RenderLambdaTable(const Footprint& fp, const std::vector<BoundEntry>& mu);
std::string RenderCtildeParams(const std::vector<DesignedCodeParams>& params, unsigned q);
std::string RenderCSSTable(const std::vector<CSSParams>& rows);
std::string RenderWitnesses(const InstanceBundle& b);

struct WitnessResult {
  std::size_t weight = 0;
  bool in = false;
  bool not_in = true;  // true when no exclusion is claimed
};
WitnessResult CheckWitness(const InstanceBundle& b, const Witness& w);

struct DiffLine {
  std::size_t line = 0;  // 1-based
  std::string expected, actual;
};

struct ReproduceResult {
  std::string target;
  std::string artifact;
  std::filesystem::path golden;
  bool golden_found = false;
  std::vector<DiffLine> diff;
  bool ok() const { return golden_found && diff.empty(); }
};

// Golden files open with the license header lines and one blank line;
// those are not part of the artifact.
std::string StripLicenseHeader(const std::string& golden);

// Line diff: positions where the texts differ, missing lines shown empty.
std::vector<DiffLine> DiffText(const std::string& expected, const std::string& actual);

// Renders `target`, writes it under `out_dir` when that is non-empty, and
// diffs against golden/<target>.txt minus its license header.
ReproduceResult Reproduce(const InstanceBundle& b, const std::string& target,
                          const std::filesystem::path& out_dir = {});

// Throws Error{kMismatchReport} listing every failing target.
void RequireReproduced(const std::vector<ReproduceResult>& results);

}  // namespace varcodes

#endif  // VARCODES_BUNDLE_H_
