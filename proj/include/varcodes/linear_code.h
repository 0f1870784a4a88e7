// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Linear codes over GF(q), affine variety codes, and exact (relative)
// minimum distances by exhaustive enumeration or the MacWilliams transform.

#ifndef VARCODES_LINEAR_CODE_H_
#define VARCODES_LINEAR_CODE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "varcodes/linalg.h"
#include "varcodes/variety.h"

namespace varcodes {

// Where a code came from: the monomial set L and whether the code is the
// evaluation span C(I,L) or its dual.
struct CodeProvenance {
  enum class Kind { kNone, kPrimary, kDual };
  Kind kind = Kind::kNone;
  std::vector<Monomial> monomials;
};

class LinearCode {
 public:
  // Rows may be dependent; they are reduced to a basis, keeping the given
  // rows when they are already independent.
  LinearCode(FieldPtr field, std::size_t n, Matrix generators, std::string label = "",
             CodeProvenance provenance = {});

  static LinearCode Zero(FieldPtr field, std::size_t n);
  static LinearCode Full(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::string& label() const { return label_; }
  const CodeProvenance& provenance() const { return provenance_; }
  LinearCode with_label(std::string label) const;

  bool contains(std::span<const Elem> word) const;
  bool contains(const LinearCode& sub) const;
  bool same_code(const LinearCode& other) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  Matrix generator_;
  std::string label_;
  CodeProvenance provenance_;
};

// C(I,L) = span{ev(M) : M in L}. Throws Error{kMonomialOutsideFootprint}.
LinearCode PrimaryCode(const Variety& v, const Footprint& fp, std::span<const Monomial> l,
                       std::string label = "");
// Orthogonal complement, generator from a nullspace basis.
LinearCode DualCode(const LinearCode& c, std::string label = "");
// C^perp(I,L) computed as DualCode(PrimaryCode(L)) with dual provenance.
LinearCode DualVarietyCode(const Variety& v, const Footprint& fp, std::span<const Monomial> l,
                           std::string label = "");

using WeightDistribution = std::vector<boost::multiprecision::cpp_int>;

// Throws Error{kNonIntegralResult} when the transform is not a valid
// distribution (fractional or negative), which means the input was not
// the weight distribution of a linear code.
WeightDistribution MacWilliams(const WeightDistribution& a, std::size_t k, std::size_t n,
                               unsigned q);

enum class Strategy { kAuto, kDirect, kMacWilliams };
std::string StrategyName(Strategy s);
Strategy ParseStrategy(const std::string& s);

// VARCODES_BUDGET if set, else 9.
unsigned DefaultBudget();
inline constexpr unsigned kExtendedBudget = 11;

struct EnumerationOptions {
  Strategy strategy = Strategy::kAuto;
  // Largest dimension that may be enumerated (q^budget words).
  unsigned budget = DefaultBudget();
  unsigned jobs = 1;
};

struct DistanceResult {
  std::size_t distance = 0;
  // Present for direct enumeration.
  std::optional<Vec> witness;
  Strategy strategy = Strategy::kDirect;
  // Codewords (up to scalar multiples) visited.
  std::uint64_t enumerated = 0;
};

// Throws Error{kBudgetExceeded}, Error{kEmptySet} for the zero code.
DistanceResult MinDistance(const LinearCode& c, const EnumerationOptions& opts = {});
// min weight over outer \ inner. Direct enumeration visits the cosets of
// `inner`; the MacWilliams route compares the weight distributions of both
// codes. Throws Error{kNotNested}, Error{kBudgetExceeded}.
DistanceResult RelativeDistance(const LinearCode& outer, const LinearCode& inner,
                                const EnumerationOptions& opts = {});

// Exact distribution by enumerating the code itself (dimension must be
// within budget). Throws Error{kBudgetExceeded}.
WeightDistribution DirectWeightDistribution(const LinearCode& c,
                                            const EnumerationOptions& opts = {});
// Chooses between enumerating the code and transforming its dual.
WeightDistribution ComputeWeightDistribution(const LinearCode& c,
                                             const EnumerationOptions& opts = {});

}  // namespace varcodes

#endif  // VARCODES_LINEAR_CODE_H_
