// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Buchberger's algorithm, normal forms and footprints (standard monomials).

#ifndef VARCODES_GROEBNER_H_
#define VARCODES_GROEBNER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "varcodes/polynomial.h"

namespace varcodes {

// I (generators) and, when add_field_equations is set, I_q = I + <X_i^q - X_i>.
struct IdealSpec {
  RingPtr ring;
  std::vector<Polynomial> generators;
  bool add_field_equations = true;

  std::vector<Polynomial> FieldEquations() const;
  std::vector<Polynomial> AllGenerators() const;
};

// A reduced Groebner basis: monic, inter-reduced, sorted ascending by
// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> polys)
      : ring_(std::move(ring)), polys_(std::move(polys)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  bool is_unit_ideal() const;

  // Remainder of full reduction; the canonical coset representative.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> polys_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t zero_reductions = 0;
};

GroebnerBasis Buchberger(const IdealSpec& ideal, BuchbergerStats* stats = nullptr);
GroebnerBasis Buchberger(RingPtr ring, std::vector<Polynomial> generators,
                         BuchbergerStats* stats = nullptr);

// Groebner basis of <base> + <extra>. Pairs inside `base` are known to
// reduce to zero and are not revisited.
GroebnerBasis ExtendBasis(const GroebnerBasis& base, std::span<const Polynomial> extra,
                          BuchbergerStats* stats = nullptr);

Polynomial SPolynomial(const Polynomial& f, const Polynomial& g);

// Buchberger criterion: every S-polynomial of basis pairs reduces to zero.
bool SatisfiesBuchbergerCriterion(const GroebnerBasis& gb);
// No term of an element is divisible by another element's leading monomial
// and all elements are monic.
bool IsReduced(const GroebnerBasis& gb);

// Monomials that are not leading monomials of the ideal, ascending.
class Footprint {
 public:
  Footprint(RingPtr ring, std::vector<Monomial> sorted_monomials);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool contains(const Monomial& m) const { return index_of(m).has_value(); }
  // Throws Error{kMonomialOutsideFootprint}.
  std::size_t require_index(const Monomial& m) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Throws Error{kInfiniteFootprint} unless some leading monomial is a pure
// power of each variable.
Footprint ComputeFootprint(const GroebnerBasis& gb);

}  // namespace varcodes

#endif  // VARCODES_GROEBNER_H_
