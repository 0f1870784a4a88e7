// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomials over a FieldSpec, monomials and monomial
// orderings.

#ifndef VARCODES_POLYNOMIAL_H_
#define VARCODES_POLYNOMIAL_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varcodes/gf.h"

namespace varcodes {

inline constexpr std::size_t kMaxVariables = 8;

// Exponent vector. Unused trailing slots are zero, so a monomial does not
// need to know how many variables its ring has.
class Monomial {
 public:
  Monomial() : exps_{} {}
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial FromExponents(std::span<const unsigned> exps);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }
  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial Lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const = default;
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Total monomial orders. Lex compares exponents variable by variable in
// priority order; graded-lex first compares total degree; weighted-graded
// first compares sum w_i e_i. Ties always fall back to the priority lex.
class MonomialOrder {
 public:
  enum class Kind { kLex, kGradedLex, kWeighted };

  // Default priority: first variable most significant.
  static MonomialOrder Lex(std::size_t nvars, std::vector<unsigned> priority = {});
  static MonomialOrder GradedLex(std::size_t nvars, std::vector<unsigned> priority = {});
  // Default priority: last variable most significant, so "w:2,3" on (X, Y)
  // breaks weight ties by the smaller Y exponent.
  static MonomialOrder Weighted(std::vector<unsigned> weights,
                                std::vector<unsigned> priority = {});
  // "lex", "grlex", "w:2,3", optionally followed by "@Y,X" naming the tie
  // priority (most significant first).
  static MonomialOrder Parse(std::string_view spec,
                             const std::vector<std::string>& variables);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<unsigned>& weights() const { return weights_; }
  const std::vector<unsigned>& priority() const { return priority_; }
  std::uint64_t weight(const Monomial& m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != Kind::kLex) {
      const std::uint64_t wa = weight(a), wb = weight(b);
      if (wa != wb) return wa <=> wb;
    }
    for (unsigned v : priority_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  std::string to_string(const std::vector<std::string>& variables) const;
  bool operator==(const MonomialOrder& other) const = default;

 private:
  Kind kind_ = Kind::kLex;
  std::vector<unsigned> weights_;
  std::vector<unsigned> priority_;
};

// Field, variable names and the order that polynomials keep their terms in.
class PolyRing {
 public:
  PolyRing(FieldPtr field, std::vector<std::string> variables, MonomialOrder order);

  const FieldPtr& field() const { return field_; }
  const FieldSpec& f() const { return *field_; }
  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const MonomialOrder& order() const { return order_; }
  // -1 when unknown.
  int variable_index(std::string_view name) const;

  std::string format(const Monomial& m) const;
  // "X^2*Y", "1". Throws kSyntaxError / kUnknownVariable.
  Monomial parse_monomial(std::string_view text) const;

  bool compatible(const PolyRing& other) const;

 private:
  FieldPtr field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial monomial;
  Elem coeff;
};

// Terms are kept sorted strictly descending in the ring's order with no zero
// coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial Constant(RingPtr ring, Elem c);
  static Polynomial FromMonomial(RingPtr ring, const Monomial& m, Elem c = 1);
  static Polynomial Variable(RingPtr ring, std::size_t index);
  // Sorts and combines like terms.
  static Polynomial FromTerms(RingPtr ring, std::vector<Term> terms);
  // Terms joined by +/-; products, powers and parentheses allowed.
  // Integer literals are element encodings, `a` is the field generator.
  static Polynomial Parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Throw Error{kZeroPolynomial} on the zero polynomial.
  const Monomial& leading_monomial() const;
  Elem leading_coefficient() const;
  Elem coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scale(Elem c) const;
  Polynomial mul_term(const Monomial& m, Elem c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  // this <- this - c * m * g. The workhorse of reduction.
  void sub_mul_term(Elem c, const Monomial& m, const Polynomial& g);
  // Drops the leading term and returns it.
  Term pop_leading();
  void push_trailing(const Term& t);

  Elem evaluate(std::span<const Elem> point) const;
  // Same terms under another compatible ring (re-sorted).
  Polynomial with_ring(RingPtr other) const;

  std::string to_string() const;
  bool operator==(const Polynomial& other) const;

 private:
  void check_ring(const Polynomial& other) const;
  Polynomial add_scaled(const Polynomial& other, Elem c) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Leading monomial under an arbitrary order (not necessarily the ring's).
Monomial LeadingMonomial(const MonomialOrder& order, const Polynomial& f);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: always reduces the current leading term by the
// first divisor (in list order) whose leading monomial divides it.
// f = sum q_i g_i + r with no term of r divisible by any lm(g_i).
DivisionResult Divide(const Polynomial& f, std::span<const Polynomial> divisors);

}  // namespace varcodes

#endif  // VARCODES_POLYNOMIAL_H_
