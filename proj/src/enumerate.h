// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive codeword enumeration. Words are visited up to scalar multiples:
// for each top index t the coefficient of row t is 1, rows above t are
// unused and rows below t run through all q^t coefficient vectors in a
// q-ary Gray order, so every step adds one multiple of a single row.

#ifndef VARCODES_SRC_ENUMERATE_H_
#define VARCODES_SRC_ENUMERATE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "varcodes/linalg.h"

namespace varcodes::internal {

struct EnumerationSummary {
  std::size_t min_weight = SIZE_MAX;
  // Coefficients (one per row) of the first minimum-weight word found.
  Vec witness_message;
  // histogram[w] = number of visited words of weight w; filled on request.
  std::vector<std::uint64_t> histogram;
  std::uint64_t visited = 0;
};

// Enumerates words whose top index lies in [lo, rows.size()). The result
// does not depend on `jobs`.
EnumerationSummary EnumerateWords(const FieldSpec& f, const std::vector<Vec>& rows,
                                  std::size_t n, std::size_t lo, bool histogram,
                                  unsigned jobs);

// Number of words EnumerateWords visits.
std::uint64_t CountWords(unsigned q, std::size_t k, std::size_t lo);

}  // namespace varcodes::internal

#endif  // VARCODES_SRC_ENUMERATE_H_
