// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// The standard code families of a footprint with sigma/mu data:
//   E(s)      = C(I, {M_1..M_s})
//   Et(delta) = C(I, {M : sigma(M) >= delta})
//   C(s)      = C^perp(I, {M_1..M_s})
//   Ct(delta) = C^perp(I, {M : mu(M) < delta})

#ifndef VARCODES_FAMILIES_H_
#define VARCODES_FAMILIES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "varcodes/bounds.h"
#include "varcodes/linear_code.h"

namespace varcodes {

class CodeFamilies {
 public:
  CodeFamilies(const Variety& v, const Footprint& fp, std::vector<unsigned> sigma,
               std::vector<unsigned> mu);

  std::size_t length() const { return fp_->size(); }
  const Variety& variety() const { return *v_; }
  const Footprint& footprint() const { return *fp_; }
  const std::vector<unsigned>& sigma() const { return sigma_; }
  const std::vector<unsigned>& mu() const { return mu_; }

  // Monomial sets. s ranges over 0..n; throws Error{kIndexOutOfRange}.
  IndexSet first(std::size_t s) const;
  IndexSet sigma_at_least(unsigned delta) const;
  IndexSet mu_below(unsigned delta) const;
  IndexSet all() const { return first(length()); }

  LinearCode primary(const IndexSet& l, std::string label = "") const;
  LinearCode dual(const IndexSet& l, std::string label = "") const;

  LinearCode E(std::size_t s) const;
  LinearCode Et(unsigned delta) const;
  LinearCode C(std::size_t s) const;
  LinearCode Ct(unsigned delta) const;

 private:
  const Variety* v_;
  const Footprint* fp_;
  std::vector<unsigned> sigma_;
  std::vector<unsigned> mu_;
};

struct DesignedCodeParams {
  unsigned delta = 0;  // designed distance (the dual bound of L)
  std::size_t n = 0;
  std::size_t k = 0;
  IndexSet l;
};

// Distinct codes Ct(delta), delta >= 2, that are nonzero; each listed with
// the largest delta giving the same L.
std::vector<DesignedCodeParams> CtildeParameters(const CodeFamilies& fam);

}  // namespace varcodes

#endif  // VARCODES_FAMILIES_H_
