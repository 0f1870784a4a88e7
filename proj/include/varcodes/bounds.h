// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Footprint-style distance bounds: divisor closures, box sets, coefficient
// case tables, sigma/mu maps and the primary/dual (relative) bounds built
// from them.

#ifndef VARCODES_BOUNDS_H_
#define VARCODES_BOUNDS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varcodes/groebner.h"
#include "varcodes/linalg.h"
#include "varcodes/variety.h"

namespace varcodes {

// Footprint positions, 0-based, ascending. Position i holds M_{i+1}.
using IndexSet = std::vector<std::size_t>;

IndexSet ToIndexSet(const Footprint& fp, std::span<const Monomial> monomials);
std::vector<Monomial> ToMonomials(const Footprint& fp, const IndexSet& s);
// Formats as "{1, X, Y}" in footprint order.
std::string FormatMonomials(const PolyRing& ring, std::span<const Monomial> ms);

// <<N_1, ..., N_u>>: footprint monomials divisible by some N_i, ascending.
// Throws Error{kMonomialOutsideFootprint}.
std::vector<Monomial> DivisorClosure(const Footprint& fp, std::span<const Monomial> generators);
// Footprint monomials dividing m (the trivial lower set of m).
std::vector<Monomial> DivisorsInFootprint(const Footprint& fp, const Monomial& m);

// Delta(I_q) \ Delta(I_q + <F>), with `gb` a Groebner basis of I_q and `fp`
// its footprint. Its size is the number of points of V(I_q) where F is
// nonzero.
std::vector<Monomial> BoxOf(const GroebnerBasis& gb, const Footprint& fp, const Polynomial& f);
std::vector<Monomial> BoxOf(const IdealSpec& ideal, const Polynomial& f);

// The box through evaluation instead of a Groebner basis extension. Normal
// forms of elements of <F> + I_q are the interpolants of the vectors
// supported on the non-roots S of F, so the box is the set of leading
// monomials of span{L_P : P in S}, read off an echelon form of the reduced
// Lagrange polynomials. Agrees with BoxOf; an order of magnitude faster.
class BoxOracle {
 public:
  BoxOracle(const Variety& v, const GroebnerBasis& gb, const Footprint& fp);

  // mask[i] says whether M_{i+1} is in the box.
  std::vector<char> mask(const Polynomial& f) const;
  std::vector<Monomial> box(const Polynomial& f) const;

 private:
  const GroebnerBasis* gb_;
  const Footprint* fp_;
  Matrix ev_;       // row j: ev(M_{j+1})
  Matrix lagrange_;  // row s: coefficients of L_{P_s} over the footprint
};

// ---------------------------------------------------------------------------
// Case tables. A table fixes a leading monomial M_i and studies
// F = M_i + sum_{u=1}^{i-1} a_u M_{i-u}; each row constrains the
// coefficients and claims <<N_1..N_u>> is contained in the box of F.

struct CoefficientConstraint {
  enum class Op { kEq, kNe };
  unsigned lhs = 0;  // coefficient number u (1-based)
  Op op = Op::kEq;
  // Either another coefficient or a field constant.
  std::optional<unsigned> rhs_coeff;
  Elem rhs_value = 0;

  bool holds(std::span<const Elem> a) const {
    const Elem r = rhs_coeff ? a[*rhs_coeff - 1] : rhs_value;
    return (a[lhs - 1] == r) == (op == Op::kEq);
  }
};

struct CaseRow {
  std::vector<CoefficientConstraint> constraints;
  std::vector<Monomial> claim;
  std::string source;  // the row text as written in the table file
  int line = 0;

  bool matches(std::span<const Elem> a) const {
    for (const auto& c : constraints) {
      if (!c.holds(a)) return false;
    }
    return true;
  }
};

struct CaseTable {
  std::string name;
  RingPtr ring;
  Monomial leading;
  std::size_t leading_index = 0;  // position of the leading monomial in the footprint
  std::vector<CaseRow> rows;
  std::vector<Monomial> intersection;

  // a_u multiplies M_{i-u}, i.e. footprint position leading_index - u.
  std::size_t num_coefficients() const { return leading_index; }
  Polynomial build(const Footprint& fp, std::span<const Elem> a) const;
  // Index of the first row whose constraints hold, if any.
  std::optional<std::size_t> first_match(std::span<const Elem> a) const;
};

// Grammar, one statement per line ('#' comments):
//   leading: Y^2
//   row: a1=1 & a2=a3=0 & a4!=0 & a5 notin {0,1} -> [Y^2, X^3]
//   row: * -> [X^3*Y, X^7]
//   intersection: [Y^2, X^4*Y, X^6]
// Throws Error{kSyntaxError, kMonomialOutsideFootprint}.
CaseTable ParseCaseTable(std::istream& in, const Footprint& fp, const std::string& name);
CaseTable LoadCaseTable(const std::string& path, const Footprint& fp, const std::string& name);

enum class VerifyMode { kAuto, kExhaustive, kSample };
std::string VerifyModeName(VerifyMode m);
VerifyMode ParseVerifyMode(const std::string& s);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kAuto;
  std::size_t samples = 200;  // per row
  std::uint64_t seed = 20260101;
  unsigned jobs = 1;
  // kAuto is exhaustive up to this many coefficients.
  std::size_t auto_exhaustive_max = 5;
  // Boxes come from BoxOracle; every `cross_check_stride`-th checked
  // assignment of a task is recomputed with BoxOf and must agree (0 turns
  // the oracle off and uses BoxOf throughout).
  std::size_t cross_check_stride = 64;
};

struct CaseViolation {
  std::size_t row = 0;
  Vec coefficients;
  std::vector<Monomial> missing;  // claimed monomials absent from the box
};

struct RowReport {
  std::size_t row = 0;
  std::size_t claim_size = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  // No assignment has this row as its first matching row.
  bool shadowed = false;
};

struct CoverageReport {
  bool complete = true;
  // Exhaustive mode: number of field assignments matching no row.
  std::optional<std::uint64_t> uncovered;
  std::optional<Vec> gap_example;
};

struct TableReport {
  std::string name;
  VerifyMode mode = VerifyMode::kExhaustive;
  std::vector<RowReport> rows;
  std::vector<CaseViolation> violations;  // first few, in row order
  std::uint64_t total_violations = 0;
  std::uint64_t total_checked = 0;
  CoverageReport coverage;
  // Boxes recomputed through the Groebner route, and disagreements.
  std::uint64_t cross_checked = 0;
  std::uint64_t engine_disagreements = 0;
  // Checked assignments whose box misses part of the stated intersection.
  std::uint64_t intersection_violations = 0;
  // Closure of the stated intersection vs the intersection of the row
  // closures. A mismatch means the printed rows under-report, not that the
  // intersection is false, so it is a warning.
  bool intersection_consistent = true;
  std::vector<Monomial> intersection_excess;
  std::vector<std::string> warnings;

  bool ok() const {
    return total_violations == 0 && intersection_violations == 0 && engine_disagreements == 0;
  }
};

// Rows are read with first-match semantics: an assignment is checked
// against the claim of the first row whose constraints it satisfies.
TableReport VerifyCaseTable(const CaseTable& table, const GroebnerBasis& gb, const Footprint& fp,
                            const VerifyOptions& opts = {});

// Row coverage over a reduced alphabet: every constant in the table plus
// enough fresh field values to realise any pattern of (in)equalities
// between linked coefficients. Also marks shadowed rows.
CoverageReport CheckCoverage(const CaseTable& table, std::vector<char>* shadowed = nullptr);

// ---------------------------------------------------------------------------
// sigma and mu.

enum class BoundProvenance { kDivisibility, kCaseTable, kOverride };
std::string ProvenanceName(BoundProvenance p);

struct BoundEntry {
  unsigned value = 0;
  BoundProvenance provenance = BoundProvenance::kDivisibility;
  // Value before any override.
  unsigned derived = 0;
  std::string note;
  // mu only: monomials beyond the divisors of M_i, ascending.
  std::vector<Monomial> extras;
};

struct MuOverride {
  Monomial monomial;
  unsigned value = 0;
  std::string note;
};

// sigma(M) = min over the rows of M's table of #<<claim>>, or #<<M>>.
std::vector<BoundEntry> SigmaTable(const Footprint& fp, std::span<const CaseTable> tables);
// mu(M_i) = #(divisors of M_i  union  {lm of tables whose stated
// intersection closure contains M_i}), then overrides.
std::vector<BoundEntry> MuTable(const Footprint& fp, std::span<const CaseTable> tables,
                                std::span<const MuOverride> overrides = {});
std::vector<unsigned> Values(std::span<const BoundEntry> entries);

// min sigma over L. Throws Error{kEmptySet}.
unsigned PrimaryBound(std::span<const unsigned> sigma, const IndexSet& l);
// L2 strictly inside L1: min sigma(M_i), M_i in L1, i >= min index of L1\L2.
// Throws Error{kNotNested}.
unsigned PrimaryRelativeBound(std::span<const unsigned> sigma, const IndexSet& l1,
                              const IndexSet& l2);
// min mu over the complement of L. Throws Error{kEmptySet}.
unsigned DualBound(std::span<const unsigned> mu, const IndexSet& l);
// Bound on d(C^perp(L2), C^perp(L1)) for L2 strictly inside L1:
// min mu(M_i), M_i not in L2, i <= max index of L1. Throws Error{kNotNested}.
unsigned DualRelativeBound(std::span<const unsigned> mu, const IndexSet& l1, const IndexSet& l2);

// ---------------------------------------------------------------------------
// Weight as the largest dimension of a space V with c*v != 0 on V \ {0}.

struct WeightSpaceReport {
  std::size_t weight = 0;
  // The span of the standard vectors on supp(c) has dimension `weight` and
  // meets the annihilator of c only in 0.
  bool standard_space_ok = false;
  // For the supplied space: a nonzero v with c*v = 0, if one exists.
  std::optional<Vec> annihilator;
  std::size_t supplied_dimension = 0;
};

WeightSpaceReport CheckWeightSpace(const FieldSpec& f, std::span<const Elem> c,
                                   const Matrix& space_basis);

}  // namespace varcodes

#endif  // VARCODES_BOUNDS_H_
