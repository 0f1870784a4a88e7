// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VARCODES_ERROR_H_
#define VARCODES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace varcodes {

enum class Errc {
  kNotPrime,
  kNotIrreducible,
  kNotMonic,
  kFieldTooLarge,
  kDivisionByZero,
  kMixedFields,
  kDimensionMismatch,
  kZeroPolynomial,
  kSyntaxError,
  kUnknownVariable,
  kInfiniteFootprint,
  kPointNotOnVariety,
  kLengthMismatch,
  kMonomialOutsideFootprint,
  kIndexOutOfRange,
  kBudgetExceeded,
  kNotNested,
  kNonIntegralResult,
  kEmptySet,
  kSingularMatrix,
  kInvalidBundle,
  kMismatchReport,
  kIo,
  kUnsupported,
};

std::string_view ErrcName(Errc code);

// All library failures are reported through this exception; `code()` lets
// callers and tests distinguish the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace varcodes

#endif  // VARCODES_ERROR_H_
