// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/polynomial.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace varcodes {

Monomial::Monomial(std::initializer_list<unsigned> exps) : exps_{} {
  if (exps.size() > kMaxVariables) {
    throw Error(Errc::kDimensionMismatch, "too many variables");
  }
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::FromExponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVariables) {
    throw Error(Errc::kDimensionMismatch, "too many variables");
  }
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw Error(Errc::kDimensionMismatch, "variable index");
  if (e > 0xffff) throw Error(Errc::kIndexOutOfRange, "exponent exceeds 2^16-1");
  exps_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 0xffff) throw Error(Errc::kIndexOutOfRange, "exponent overflow");
    out.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  }
  return out;
}

Monomial Monomial::Lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

std::vector<unsigned> CheckPriority(std::size_t nvars, std::vector<unsigned> priority,
                                    bool last_first) {
  if (priority.empty()) {
    priority.resize(nvars);
    std::iota(priority.begin(), priority.end(), 0u);
    if (last_first) std::reverse(priority.begin(), priority.end());
  }
  std::vector<unsigned> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != nvars) {
      throw Error(Errc::kDimensionMismatch, "tie priority is not a permutation");
    }
  }
  if (nvars > kMaxVariables) throw Error(Errc::kDimensionMismatch, "too many variables");
  return priority;
}

std::string Trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> SplitList(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(Trimmed(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::Lex(std::size_t nvars, std::vector<unsigned> priority) {
  MonomialOrder o;
  o.kind_ = Kind::kLex;
  o.priority_ = CheckPriority(nvars, std::move(priority), false);
  return o;
}

MonomialOrder MonomialOrder::GradedLex(std::size_t nvars, std::vector<unsigned> priority) {
  MonomialOrder o;
  o.kind_ = Kind::kGradedLex;
  o.priority_ = CheckPriority(nvars, std::move(priority), false);
  return o;
}

MonomialOrder MonomialOrder::Weighted(std::vector<unsigned> weights,
                                      std::vector<unsigned> priority) {
  for (unsigned w : weights) {
    if (w == 0) throw Error(Errc::kSyntaxError, "weights must be positive");
  }
  MonomialOrder o;
  o.kind_ = Kind::kWeighted;
  o.priority_ = CheckPriority(weights.size(), std::move(priority), true);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::Parse(std::string_view spec,
                                   const std::vector<std::string>& variables) {
  std::string_view head = spec;
  std::vector<unsigned> priority;
  if (auto at = spec.find('@'); at != std::string_view::npos) {
    head = spec.substr(0, at);
    for (const std::string& name : SplitList(spec.substr(at + 1), ',')) {
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) throw Error(Errc::kUnknownVariable, name);
      priority.push_back(static_cast<unsigned>(it - variables.begin()));
    }
  }
  const std::string kind = Trimmed(head.substr(0, head.find(':')));
  if (kind == "lex") return Lex(variables.size(), priority);
  if (kind == "grlex") return GradedLex(variables.size(), priority);
  if (kind == "w") {
    auto colon = head.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::kSyntaxError, "w: needs weights");
    std::vector<unsigned> weights;
    for (const std::string& w : SplitList(head.substr(colon + 1), ',')) {
      try {
        weights.push_back(static_cast<unsigned>(std::stoul(w)));
      } catch (const std::exception&) {
        throw Error(Errc::kSyntaxError, "bad weight '" + w + "'");
      }
    }
    if (weights.size() != variables.size()) {
      throw Error(Errc::kDimensionMismatch, "one weight per variable required");
    }
    return Weighted(weights, priority);
  }
  throw Error(Errc::kSyntaxError, "unknown order '" + std::string(spec) + "'");
}

std::uint64_t MonomialOrder::weight(const Monomial& m) const {
  std::uint64_t w = 0;
  if (kind_ == Kind::kWeighted) {
    for (std::size_t i = 0; i < weights_.size(); ++i) w += std::uint64_t{weights_[i]} * m[i];
  } else {
    for (std::size_t i = 0; i < priority_.size(); ++i) w += m[i];
  }
  return w;
}

std::string MonomialOrder::to_string(const std::vector<std::string>& variables) const {
  std::string out;
  switch (kind_) {
    case Kind::kLex: out = "lex"; break;
    case Kind::kGradedLex: out = "grlex"; break;
    case Kind::kWeighted:
      out = "w:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weights_[i]);
      }
      break;
  }
  out += "@";
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) out += ",";
    out += variables.at(priority_[i]);
  }
  return out;
}

PolyRing::PolyRing(FieldPtr field, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(field)), variables_(std::move(variables)), order_(std::move(order)) {
  if (variables_.empty() || variables_.size() > kMaxVariables) {
    throw Error(Errc::kDimensionMismatch, "1.." + std::to_string(kMaxVariables) +
                                              " variables supported");
  }
  if (order_.nvars() != variables_.size()) {
    throw Error(Errc::kDimensionMismatch, "order/variable count mismatch");
  }
}

int PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial PolyRing::parse_monomial(std::string_view text) const {
  Polynomial p = Polynomial::Parse(std::make_shared<PolyRing>(*this), text);
  if (p.size() != 1 || p.leading_coefficient() != 1) {
    throw Error(Errc::kSyntaxError, "not a monomial: '" + std::string(text) + "'");
  }
  return p.leading_monomial();
}

bool PolyRing::compatible(const PolyRing& other) const {
  return (*field_ == *other.field_) && variables_ == other.variables_;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::Constant(RingPtr ring, Elem c) {
  return FromMonomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::FromMonomial(RingPtr ring, const Monomial& m, Elem c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::Variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(Errc::kIndexOutOfRange, "variable index");
  Monomial m;
  m.set(index, 1);
  return FromMonomial(std::move(ring), m, 1);
}

Polynomial Polynomial::FromTerms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order();
  const FieldSpec& f = ring->f();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.less(b.monomial, a.monomial);
  });
  Polynomial p(std::move(ring));
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(Errc::kZeroPolynomial, "leading monomial of 0");
  return terms_.front().monomial;
}

Elem Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(Errc::kZeroPolynomial, "leading coefficient of 0");
  return terms_.front().coeff;
}

Elem Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(ring_->compatible(*other.ring_) &&
                                ring_->order() == other.ring_->order())) {
    throw Error(Errc::kMixedFields, "polynomials from different rings");
  }
}

Polynomial Polynomial::add_scaled(const Polynomial& other, Elem c) const {
  Polynomial out = *this;
  out.sub_mul_term(ring_->f().neg(c), Monomial(), other);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  return add_scaled(other, 1);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(other);
  return add_scaled(other, ring_->f().neg(1));
}

Polynomial Polynomial::operator-() const { return scale(ring_->f().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  Polynomial out(ring_);
  for (const Term& t : terms_) {
    out.sub_mul_term(ring_->f().neg(t.coeff), t.monomial, other);
  }
  return out;
}

Polynomial Polynomial::scale(Elem c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.monomial, ring_->f().mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, Elem c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.terms_.push_back({t.monomial * m, ring_->f().mul(t.coeff, c)});
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(ring_->f().inv(terms_.front().coeff));
}

void Polynomial::sub_mul_term(Elem c, const Monomial& m, const Polynomial& g) {
  if (c == 0 || g.terms_.empty()) return;
  const FieldSpec& f = ring_->f();
  const MonomialOrder& order = ring_->order();
  thread_local std::vector<Term> scratch;
  scratch.clear();
  scratch.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial next = g.terms_[0].monomial * m;
  while (i < terms_.size() && j < g.terms_.size()) {
    const auto cmp = order.compare(terms_[i].monomial, next);
    if (cmp == std::strong_ordering::greater) {
      scratch.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      scratch.push_back({next, f.neg(f.mul(c, g.terms_[j].coeff))});
      if (++j < g.terms_.size()) next = g.terms_[j].monomial * m;
    } else {
      const Elem v = f.sub(terms_[i].coeff, f.mul(c, g.terms_[j].coeff));
      if (v != 0) scratch.push_back({next, v});
      ++i;
      if (++j < g.terms_.size()) next = g.terms_[j].monomial * m;
    }
  }
  while (i < terms_.size()) scratch.push_back(terms_[i++]);
  while (j < g.terms_.size()) {
    scratch.push_back({g.terms_[j].monomial * m, f.neg(f.mul(c, g.terms_[j].coeff))});
    ++j;
  }
  terms_.assign(scratch.begin(), scratch.end());
}

Term Polynomial::pop_leading() {
  if (terms_.empty()) throw Error(Errc::kZeroPolynomial, "pop from 0");
  Term t = terms_.front();
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::push_trailing(const Term& t) {
  if (t.coeff == 0) return;
  terms_.push_back(t);
}

Elem Polynomial::evaluate(std::span<const Elem> point) const {
  const std::size_t nv = ring_->nvars();
  if (point.size() != nv) throw Error(Errc::kDimensionMismatch, "point dimension");
  const FieldSpec& f = ring_->f();
  Elem sum = 0;
  for (const Term& t : terms_) {
    Elem v = t.coeff;
    for (std::size_t i = 0; i < nv && v != 0; ++i) {
      if (t.monomial[i] != 0) v = f.mul(v, f.pow(point[i], t.monomial[i]));
    }
    sum = f.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::with_ring(RingPtr other) const {
  if (!ring_->compatible(*other)) throw Error(Errc::kMixedFields, "incompatible ring");
  return FromTerms(std::move(other), terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const FieldSpec& f = ring_->f();
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string coeff = f.format(t.coeff);
    const bool compound = coeff.find('+') != std::string::npos ||
                          coeff.find('*') != std::string::npos;
    if (t.monomial.is_one()) {
      out += compound ? "(" + coeff + ")" : coeff;
    } else if (t.coeff == 1) {
      out += ring_->format(t.monomial);
    } else {
      out += (compound ? "(" + coeff + ")" : coeff) + "*" + ring_->format(t.monomial);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial Parse() {
    Polynomial p = Expr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw Error(Errc::kSyntaxError, why + " in '" + std::string(text_) + "' at offset " +
                                        std::to_string(pos_));
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
      if (v > 0xffff) Fail("integer too large");
    }
    return v;
  }
  Polynomial Expr() {
    Polynomial value(ring_);
    if (Accept('-')) {
      value = -Term();
    } else {
      value = Term();
    }
    for (;;) {
      if (Accept('+')) {
        value = value + Term();
      } else if (Accept('-')) {
        value = value - Term();
      } else {
        return value;
      }
    }
  }
  Polynomial Term() {
    Polynomial value = Factor();
    for (;;) {
      if (Accept('*')) {
        value = value * Factor();
        continue;
      }
      // Juxtaposition such as "2X" or "(a+1)(X+1)".
      SkipSpace();
      if (pos_ < text_.size() &&
          (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
        value = value * Factor();
        continue;
      }
      return value;
    }
  }
  Polynomial Factor() {
    Polynomial base = Atom();
    if (Accept('^')) return base.pow(static_cast<unsigned>(Integer()));
    return base;
  }
  Polynomial Atom() {
    if (Accept('(')) {
      Polynomial v = Expr();
      if (!Accept(')')) Fail("expected ')'");
      return v;
    }
    SkipSpace();
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const int idx = ring_->variable_index(name);
      if (idx >= 0) return Polynomial::Variable(ring_, static_cast<std::size_t>(idx));
      if (name == "a") return Polynomial::Constant(ring_, ring_->f().generator_symbol());
      throw Error(Errc::kUnknownVariable, std::string(name));
    }
    const unsigned long v = Integer();
    if (v >= ring_->f().size()) Fail("element encoding out of range");
    return Polynomial::Constant(ring_, static_cast<Elem>(v));
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::Parse(RingPtr ring, std::string_view text) {
  return PolyParser(std::move(ring), text).Parse();
}

Monomial LeadingMonomial(const MonomialOrder& order, const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::kZeroPolynomial, "leading monomial of 0");
  const Monomial* best = &f.terms().front().monomial;
  for (const Term& t : f.terms()) {
    if (order.less(*best, t.monomial)) best = &t.monomial;
  }
  return *best;
}

DivisionResult Divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingPtr& ring = f.ring();
  const FieldSpec& field = ring->f();
  DivisionResult result{{}, Polynomial(ring)};
  result.quotients.reserve(divisors.size());
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw Error(Errc::kZeroPolynomial, "division by 0");
    result.quotients.emplace_back(ring);
  }
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lead = p.terms().front();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Monomial& lm = divisors[i].leading_monomial();
      if (lm.divides(lead.monomial)) {
        const Elem c = field.div(lead.coeff, divisors[i].leading_coefficient());
        const Monomial m = lead.monomial / lm;
        result.quotients[i].sub_mul_term(field.neg(c), m, Polynomial::Constant(ring, 1));
        p.sub_mul_term(c, m, divisors[i]);
        reduced = true;
        break;
      }
    }
    if (!reduced) result.remainder.push_trailing(p.pop_leading());
  }
  return result;
}

}  // namespace varcodes
