// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dual bases on a variety: given F_1..F_n whose evaluations b_i form a basis
// of F_q^n, the columns of B^{-1} (B with rows b_i) are vectors b_j^perp with
// b_i . b_j^perp = delta_ij, and F_j^perp interpolates b_j^perp. Then
// C^perp(I,L) is spanned by ev(F_j^perp) for M_j outside L.

#ifndef VARCODES_DUAL_BASIS_H_
#define VARCODES_DUAL_BASIS_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "varcodes/bounds.h"
#include "varcodes/linear_code.h"

namespace varcodes {

struct DualBasis {
  std::vector<Polynomial> basis;  // F_1..F_n
  std::vector<Polynomial> dual;   // F_1^perp..F_n^perp
  Matrix b;                       // rows ev(F_i)
  Matrix b_inv;
};

// Throws Error{kSingularMatrix, kLengthMismatch}.
DualBasis ComputeDualBasis(const Variety& v, const GroebnerBasis& gb,
                           std::span<const Polynomial> basis);
// F_i = M_i.
DualBasis ComputeDualBasis(const Variety& v, const GroebnerBasis& gb, const Footprint& fp);

// Whether sum_s F_i(P_s) F_j^perp(P_s) = delta_ij for all i, j.
bool CheckBiorthogonal(const Variety& v, const DualBasis& db);

// Generator matrix {ev(F_j^perp) : j not in L}.
LinearCode PrimaryDescriptionOfDual(const Variety& v, const DualBasis& db, const IndexSet& l,
                                    std::string label = "");

void WriteDualBasisCsv(std::ostream& out, const DualBasis& db);
void WriteDualBasisTable(std::ostream& out, const DualBasis& db);

}  // namespace varcodes

#endif  // VARCODES_DUAL_BASIS_H_
