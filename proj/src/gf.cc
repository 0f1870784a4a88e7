// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/gf.h"

#include <cctype>
#include <string>
#include <utility>

namespace varcodes {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kNotIrreducible: return "NotIrreducible";
    case Errc::kNotMonic: return "NotMonic";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kMixedFields: return "MixedFields";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kUnknownVariable: return "UnknownVariable";
    case Errc::kInfiniteFootprint: return "InfiniteFootprint";
    case Errc::kPointNotOnVariety: return "PointNotOnVariety";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kMonomialOutsideFootprint: return "MonomialOutsideFootprint";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kNotNested: return "NotNested";
    case Errc::kNonIntegralResult: return "NonIntegralResult";
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kInvalidBundle: return "InvalidBundle";
    case Errc::kMismatchReport: return "MismatchReport";
    case Errc::kIo: return "Io";
    case Errc::kUnsupported: return "Unsupported";
  }
  return "Unknown";
}

bool IsPrime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Dense polynomials over GF(p), low degree first, used only while building
// a field.
using PrimePoly = std::vector<unsigned>;

void Trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned InvModPrime(unsigned x, unsigned p) {
  // p is tiny; Fermat is plenty.
  unsigned result = 1;
  unsigned base = x % p;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

PrimePoly ModPrimePoly(PrimePoly f, const PrimePoly& g, unsigned p) {
  Trim(f);
  const std::size_t dg = g.size() - 1;
  const unsigned lead_inv = InvModPrime(g.back(), p);
  while (f.size() > dg) {
    const unsigned factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p * p - factor * g[i] % p) % p;
    }
    Trim(f);
  }
  return f;
}

bool IsIrreducible(const PrimePoly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  // Every monic polynomial of degree d, 1 <= d <= m/2, as a trial divisor.
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      PrimePoly g(d + 1, 0);
      g[d] = 1;
      std::size_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      if (ModPrimePoly(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr FieldSpec::Make(unsigned p, unsigned m, std::vector<unsigned> modulus) {
  if (!IsPrime(p)) {
    throw Error(Errc::kNotPrime, "characteristic " + std::to_string(p));
  }
  if (m == 0 || modulus.size() != m + 1 || modulus.front() != 1) {
    throw Error(Errc::kNotMonic, "modulus must be monic of degree " +
                                     std::to_string(m));
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 16)) {
      throw Error(Errc::kFieldTooLarge, "p^m exceeds 2^16");
    }
  }
  for (unsigned c : modulus) {
    if (c >= p) {
      throw Error(Errc::kNotMonic, "coefficient not reduced mod p");
    }
  }
  PrimePoly f(modulus.rbegin(), modulus.rend());
  if (!IsIrreducible(f, p)) {
    throw Error(Errc::kNotIrreducible, "modulus has a proper factor");
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->m_ = m;
  spec->q_ = static_cast<unsigned>(q);
  spec->modulus_ = f;

  auto to_poly = [&](unsigned x) {
    PrimePoly g(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      g[i] = x % p;
      x /= p;
    }
    return g;
  };
  auto to_code = [&](const PrimePoly& g) {
    unsigned x = 0;
    for (std::size_t i = g.size(); i-- > 0;) x = x * p + g[i];
    return x;
  };
  auto slow_mul = [&](unsigned x, unsigned y) {
    PrimePoly a = to_poly(x), b = to_poly(y);
    PrimePoly prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < m; ++j) {
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
      }
    }
    return to_code(ModPrimePoly(prod, f, p));
  };

  spec->alpha_ = static_cast<Elem>(to_code(ModPrimePoly(PrimePoly{0, 1}, f, p)));

  const unsigned order = spec->q_ - 1;
  for (unsigned g = 1; g < spec->q_; ++g) {
    std::vector<Elem> powers;
    powers.reserve(order);
    unsigned x = 1;
    bool primitive = true;
    for (unsigned e = 0; e < order; ++e) {
      if (e > 0 && x == 1) {
        primitive = false;
        break;
      }
      powers.push_back(static_cast<Elem>(x));
      x = slow_mul(x, g);
    }
    if (primitive && x == 1) {
      spec->exp_ = std::move(powers);
      break;
    }
  }
  spec->log_.assign(spec->q_, 0);
  for (unsigned e = 0; e < order; ++e) spec->log_[spec->exp_[e]] = e;
  return spec;
}

std::vector<unsigned> FieldSpec::modulus() const {
  return std::vector<unsigned>(modulus_.rbegin(), modulus_.rend());
}

Elem FieldSpec::add_digits(Elem x, Elem y, bool subtract) const {
  unsigned result = 0;
  unsigned scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const unsigned dx = x % p_, dy = y % p_;
    x = static_cast<Elem>(x / p_);
    y = static_cast<Elem>(y / p_);
    const unsigned d = subtract ? (dx + p_ - dy) % p_ : (dx + dy) % p_;
    result += d * scale;
    scale *= p_;
  }
  return static_cast<Elem>(result);
}

Elem FieldSpec::inv(Elem x) const {
  if (x == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

Elem FieldSpec::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1))) %
              (q_ - 1)];
}

std::vector<Elem> FieldSpec::elements() const {
  std::vector<Elem> out(q_);
  for (unsigned i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::string FieldSpec::format(Elem x) const {
  if (m_ == 1) return std::to_string(x);
  if (x == 0) return "0";
  std::string out;
  std::vector<unsigned> digits(m_);
  unsigned rest = x;
  for (unsigned i = 0; i < m_; ++i) {
    digits[i] = rest % p_;
    rest /= p_;
  }
  for (unsigned i = m_; i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string power = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    if (i == 0) {
      out += std::to_string(digits[i]);
    } else if (digits[i] == 1) {
      out += power;
    } else {
      out += std::to_string(digits[i]) + "*" + power;
    }
  }
  return out;
}

namespace {

// expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := atom ('^' int)?, atom := int | 'a' | '(' expr ')'.
// Integer literals are element encodings.
class ElementParser {
 public:
  ElementParser(const FieldSpec& field, std::string_view text)
      : field_(field), text_(text) {}

  Elem Parse() {
    Elem value = Expr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw Error(Errc::kSyntaxError, why + " in '" + std::string(text_) +
                                        "' at offset " + std::to_string(pos_));
  }
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long Integer() {
    SkipSpace();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Fail("expected integer");
    }
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (v > (1ul << 40)) Fail("integer too large");
    }
    return v;
  }
  Elem Expr() {
    Elem value;
    if (Accept('-')) {
      value = field_.neg(Term());
    } else {
      value = Term();
    }
    for (;;) {
      if (Accept('+')) {
        value = field_.add(value, Term());
      } else if (Accept('-')) {
        value = field_.sub(value, Term());
      } else {
        return value;
      }
    }
  }
  Elem Term() {
    Elem value = Factor();
    while (Accept('*')) value = field_.mul(value, Factor());
    return value;
  }
  Elem Factor() {
    Elem base = Atom();
    if (Accept('^')) return field_.pow(base, Integer());
    return base;
  }
  Elem Atom() {
    if (Accept('(')) {
      Elem v = Expr();
      if (!Accept(')')) Fail("expected ')'");
      return v;
    }
    if (Accept('a')) return field_.generator_symbol();
    const unsigned long v = Integer();
    if (v >= field_.size()) Fail("encoding out of range");
    return static_cast<Elem>(v);
  }

  const FieldSpec& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem FieldSpec::parse(std::string_view text) const {
  return ElementParser(*this, text).Parse();
}

FieldElement::FieldElement(FieldPtr field, Elem code)
    : field_(std::move(field)), code_(code) {
  if (code_ >= field_->size()) {
    throw Error(Errc::kIndexOutOfRange, "element encoding out of range");
  }
}

const FieldSpec& FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw Error(Errc::kMixedFields, "operands from different fields");
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same_field(o).div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const {
  return {field_, field_->pow(code_, e)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return code_ == o.code_ && (field_ == o.field_ || *field_ == *o.field_);
}

std::vector<FieldElement> EnumerateField(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->size());
  for (Elem x : field->elements()) out.emplace_back(field, x);
  return out;
}

}  // namespace varcodes
