// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/families.h"

#include <utility>

namespace varcodes {

CodeFamilies::CodeFamilies(const Variety& v, const Footprint& fp, std::vector<unsigned> sigma,
                           std::vector<unsigned> mu)
    : v_(&v), fp_(&fp), sigma_(std::move(sigma)), mu_(std::move(mu)) {
  if (sigma_.size() != fp.size() || mu_.size() != fp.size() || v.size() != fp.size()) {
    throw Error(Errc::kLengthMismatch, "footprint, variety and bound tables differ in size");
  }
}

IndexSet CodeFamilies::first(std::size_t s) const {
  if (s > length()) {
    throw Error(Errc::kIndexOutOfRange,
                "s = " + std::to_string(s) + " exceeds n = " + std::to_string(length()));
  }
  IndexSet out;
  for (std::size_t i = 0; i < s; ++i) out.push_back(i);
  return out;
}

IndexSet CodeFamilies::sigma_at_least(unsigned delta) const {
  IndexSet out;
  for (std::size_t i = 0; i < length(); ++i) {
    if (sigma_[i] >= delta) out.push_back(i);
  }
  return out;
}

IndexSet CodeFamilies::mu_below(unsigned delta) const {
  IndexSet out;
  for (std::size_t i = 0; i < length(); ++i) {
    if (mu_[i] < delta) out.push_back(i);
  }
  return out;
}

LinearCode CodeFamilies::primary(const IndexSet& l, std::string label) const {
  const auto ms = ToMonomials(*fp_, l);
  return PrimaryCode(*v_, *fp_, ms, std::move(label));
}

LinearCode CodeFamilies::dual(const IndexSet& l, std::string label) const {
  const auto ms = ToMonomials(*fp_, l);
  return DualVarietyCode(*v_, *fp_, ms, std::move(label));
}

LinearCode CodeFamilies::E(std::size_t s) const {
  return primary(first(s), "E(" + std::to_string(s) + ")");
}

LinearCode CodeFamilies::Et(unsigned delta) const {
  return primary(sigma_at_least(delta), "Et(" + std::to_string(delta) + ")");
}

LinearCode CodeFamilies::C(std::size_t s) const {
  return dual(first(s), "C(" + std::to_string(s) + ")");
}

LinearCode CodeFamilies::Ct(unsigned delta) const {
  return dual(mu_below(delta), "Ct(" + std::to_string(delta) + ")");
}

std::vector<DesignedCodeParams> CtildeParameters(const CodeFamilies& fam) {
  std::vector<DesignedCodeParams> out;
  unsigned max_mu = 0;
  for (unsigned m : fam.mu()) max_mu = std::max(max_mu, m);
  for (unsigned delta = 2; delta <= max_mu; ++delta) {
    IndexSet l = fam.mu_below(delta);
    if (l.size() == fam.length()) break;
    if (!out.empty() && out.back().l == l) continue;
    DesignedCodeParams p;
    p.delta = DualBound(fam.mu(), l);
    p.n = fam.length();
    p.k = fam.length() - l.size();
    p.l = std::move(l);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace varcodes
