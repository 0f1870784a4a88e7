// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in small finite fields GF(p^m).
//
// Elements are identified with integers 0..q-1: the element
// b_{m-1} a^{m-1} + ... + b_1 a + b_0 (a a root of the modulus) is encoded as
// sum b_i p^i. For p = 2 this is the bit pattern b_{m-1}...b_0, so addition
// is XOR of encodings.

#ifndef VARCODES_GF_H_
#define VARCODES_GF_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "varcodes/error.h"

namespace varcodes {

// Raw element encoding. Only meaningful together with a FieldSpec.
using Elem = std::uint16_t;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

class FieldSpec {
 public:
  // `modulus` lists coefficients from the leading one down to the constant
  // term: {c_m, ..., c_0}. Throws Error{kNotPrime, kNotMonic,
  // kNotIrreducible, kFieldTooLarge}.
  static FieldPtr Make(unsigned p, unsigned m, std::vector<unsigned> modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  unsigned size() const { return q_; }
  // Leading coefficient first, as passed to Make.
  std::vector<unsigned> modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // The class of T modulo the modulus polynomial (the symbol `a` in text).
  Elem generator_symbol() const { return alpha_; }
  // A primitive element (generator of the multiplicative group).
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem x, Elem y) const {
    if (p_ == 2) return static_cast<Elem>(x ^ y);
    return add_digits(x, y, false);
  }
  Elem sub(Elem x, Elem y) const {
    if (p_ == 2) return static_cast<Elem>(x ^ y);
    return add_digits(x, y, true);
  }
  Elem neg(Elem x) const { return sub(0, x); }
  Elem mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    unsigned e = log_[x] + log_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  // Throws Error{kDivisionByZero} for x == 0.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;

  // Discrete log base primitive(); x must be nonzero.
  unsigned log(Elem x) const { return log_[x]; }
  Elem exp(unsigned e) const { return exp_[e % (q_ - 1)]; }

  // All q elements in encoding order 0..q-1.
  std::vector<Elem> elements() const;

  // Text form: a-notation such as "a^2+a+1" for extension fields, the
  // integer for prime fields.
  std::string format(Elem x) const;
  // Accepts an integer encoding ("5") or an a-expression ("a^2+1", "a^9",
  // "a*a+1", "(a+1)^2"). Throws Error{kSyntaxError}.
  Elem parse(std::string_view text) const;

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  FieldSpec() = default;
  Elem add_digits(Elem x, Elem y, bool subtract) const;

  unsigned p_ = 0;
  unsigned m_ = 0;
  unsigned q_ = 0;
  Elem alpha_ = 0;
  std::vector<unsigned> modulus_;  // low to high, monic
  std::vector<Elem> exp_;          // size q-1
  std::vector<unsigned> log_;      // size q, log_[0] unused
};

// Value-semantic element bound to its field, for code that prefers operators.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem code);

  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_->format(code_); }

 private:
  const FieldSpec& same_field(const FieldElement& o) const;

  FieldPtr field_;
  Elem code_;
};

// Every element of the field, in encoding order.
std::vector<FieldElement> EnumerateField(const FieldPtr& field);

bool IsPrime(unsigned n);

}  // namespace varcodes

#endif  // VARCODES_GF_H_
