// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Asymmetric quantum codes from nested affine variety codes via the CSS
// construction: C2 strictly inside C1 gives [[n, dim C1 - dim C2, dZ/dX]]
// with dZ = d(C1, C2) and dX = d(C2^perp, C1^perp).

#ifndef VARCODES_CSS_H_
#define VARCODES_CSS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varcodes/families.h"

namespace varcodes {

// A code named by family: "E:5", "Et:3", "C:13", "Ct:4", "zero", "full",
// and "dual(...)" around any of them. "E(5)" is accepted for "E:5".
struct CodeRef {
  enum class Family { kE, kEt, kC, kCt, kZero, kFull };
  Family family = Family::kZero;
  unsigned param = 0;
  bool dual = false;

  static CodeRef Parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const CodeRef&) const = default;
};

// C(I,L) when primary, C^perp(I,L) otherwise.
struct VarietyCodeSpec {
  bool primary = true;
  IndexSet l;
};

VarietyCodeSpec Resolve(const CodeFamilies& fam, const CodeRef& ref);
LinearCode Build(const CodeFamilies& fam, const CodeRef& ref);

enum class Purity { kUnknown, kPure, kImpure };
std::string PurityName(Purity p);

struct CSSParams {
  std::size_t n = 0;
  std::size_t ell = 0;
  // Lower bounds, oriented so that dz >= dx.
  unsigned dz = 0;
  unsigned dx = 0;
  // The pair's own orientation gave dz < dx; the dual pair was used.
  bool swapped = false;
  CodeRef c1, c2;
  Purity purity = Purity::kUnknown;
  std::optional<int> g1, g2;

  std::string to_string(unsigned q) const;
};

// Throws Error{kNotNested}, Error{kUnsupported} for pairs that mix a
// nontrivial primary code with a nontrivial dual code.
CSSParams ComputeCSSParams(const CodeFamilies& fam, const CodeRef& c1, const CodeRef& c2);

struct PurityReport {
  Purity verdict = Purity::kUnknown;
  std::optional<std::size_t> d_c1, d_c1_c2, d_c2perp, d_c2perp_c1perp;
  std::string reason;
};

// Exact distances, as far as the enumeration budget allows, compared with
// each other and with the bounds. Budget exhaustion leaves a side unknown.
PurityReport PurityCheck(const CodeFamilies& fam, const CodeRef& c1, const CodeRef& c2,
                         const EnumerationOptions& opts = {});

struct CSSPair {
  CodeRef c1, c2;
};

// TOML: [[pair]] c1 = "E:5"  c2 = "E:4".
std::vector<CSSPair> LoadPairs(const std::string& path);

// Best known minimum distances d(n, k) from a user-supplied CSV "n,k,d".
class BestKnownTable {
 public:
  // Throws Error{kInvalidBundle} unless d is non-increasing in k for each n.
  static BestKnownTable Load(const std::string& path);
  static BestKnownTable Parse(std::istream& in);

  std::optional<unsigned> best(std::size_t n, std::size_t k) const;
  // Largest k with best(n, k) >= d.
  std::optional<std::size_t> largest_dimension(std::size_t n, unsigned d) const;

 private:
  std::map<std::pair<std::size_t, std::size_t>, unsigned> table_;
};

// g1 = deltaZ - dZ and g2 = deltaX - dX, deltas taken from `best`.
void FillGaps(CSSParams& p, const BestKnownTable& best);

std::vector<CSSParams> EnumerateCSSTable(const CodeFamilies& fam, const std::vector<CSSPair>& pairs,
                                         const BestKnownTable* best = nullptr);

}  // namespace varcodes

#endif  // VARCODES_CSS_H_
