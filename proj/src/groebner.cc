// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/groebner.h"

#include <algorithm>
#include <utility>

namespace varcodes {

std::vector<Polynomial> IdealSpec::FieldEquations() const {
  std::vector<Polynomial> out;
  const unsigned q = ring->f().size();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Monomial xq;
    xq.set(i, q);
    out.push_back(Polynomial::FromMonomial(ring, xq) - Polynomial::Variable(ring, i));
  }
  return out;
}

std::vector<Polynomial> IdealSpec::AllGenerators() const {
  std::vector<Polynomial> out = generators;
  if (add_field_equations) {
    for (Polynomial& f : FieldEquations()) out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Full reduction of f by monic polynomials `basis` (skipping inactive ones).
Polynomial Reduce(Polynomial p, const std::vector<Polynomial>& basis,
                  const std::vector<char>* active = nullptr) {
  Polynomial r(p.ring());
  while (!p.is_zero()) {
    const Term lead = p.terms().front();
    const Polynomial* divisor = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (active && !(*active)[i]) continue;
      if (basis[i].leading_monomial().divides(lead.monomial)) {
        divisor = &basis[i];
        break;
      }
    }
    if (divisor) {
      p.sub_mul_term(lead.coeff, lead.monomial / divisor->leading_monomial(), *divisor);
    } else {
      r.push_trailing(p.pop_leading());
    }
  }
  return r;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, BuchbergerStats* stats)
      : ring_(std::move(ring)), stats_(stats) {}

  // Elements already known to form a Groebner basis among themselves.
  void AddTrusted(const Polynomial& g) {
    basis_.push_back(g.monic());
    active_.push_back(1);
  }

  void AddGenerator(const Polynomial& f) {
    Polynomial h = Reduce(f, basis_, &active_);
    if (!h.is_zero()) Insert(h.monic());
  }

  void Run() {
    while (!pairs_.empty()) {
      // Normal selection strategy: smallest lcm first.
      const MonomialOrder& order = ring_->order();
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const Pair& a, const Pair& b) {
                                     return order.less(a.lcm, b.lcm);
                                   });
      const Pair pair = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      if (stats_) ++stats_->pairs_considered;
      Polynomial h = Reduce(SPolynomial(basis_[pair.i], basis_[pair.j]), basis_, &active_);
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      Insert(h.monic());
    }
  }

  GroebnerBasis Finish() {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's; then inter-reduce tails.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i || !active_[j]) continue;
        const Monomial& mi = basis_[i].leading_monomial();
        const Monomial& mj = basis_[j].leading_monomial();
        if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Polynomial tail = minimal[i];
      const Term lead = tail.pop_leading();
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial r = Reduce(tail, others);
      Polynomial full = Polynomial::FromMonomial(ring_, lead.monomial, lead.coeff) + r;
      reduced.push_back(full.monic());
    }
    const MonomialOrder& order = ring_->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis(ring_, std::move(reduced));
  }

 private:
  void Insert(const Polynomial& h) {
    const std::size_t k = basis_.size();
    basis_.push_back(h);
    active_.push_back(1);
    if (h.leading_monomial().is_one()) {
      // Unit ideal: nothing else matters.
      std::fill(active_.begin(), active_.end(), 0);
      active_[k] = 1;
      pairs_.clear();
      return;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      const Monomial& mi = basis_[i].leading_monomial();
      if (mi.coprime(h.leading_monomial())) {
        if (stats_) ++stats_->pairs_skipped_coprime;
        continue;
      }
      pairs_.push_back({i, k, Monomial::Lcm(mi, h.leading_monomial())});
    }
  }

  RingPtr ring_;
  BuchbergerStats* stats_;
  std::vector<Polynomial> basis_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return polys_.size() == 1 && polys_[0].leading_monomial().is_one();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return Reduce(f.ring() == ring_ ? f : f.with_ring(ring_), polys_);
}

Polynomial SPolynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& mf = f.leading_monomial();
  const Monomial& mg = g.leading_monomial();
  const Monomial lcm = Monomial::Lcm(mf, mg);
  const FieldSpec& field = f.ring()->f();
  Polynomial s = f.mul_term(lcm / mf, field.inv(f.leading_coefficient()));
  s.sub_mul_term(field.inv(g.leading_coefficient()), lcm / mg, g);
  return s;
}

GroebnerBasis Buchberger(RingPtr ring, std::vector<Polynomial> generators,
                         BuchbergerStats* stats) {
  BuchbergerRun run(ring, stats);
  // Feeding low-leading-monomial generators first keeps early reductions short.
  std::sort(generators.begin(), generators.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
    return ring->order().less(a.leading_monomial(), b.leading_monomial());
  });
  for (const Polynomial& f : generators) {
    if (!f.is_zero()) run.AddGenerator(f);
  }
  run.Run();
  return run.Finish();
}

GroebnerBasis Buchberger(const IdealSpec& ideal, BuchbergerStats* stats) {
  return Buchberger(ideal.ring, ideal.AllGenerators(), stats);
}

GroebnerBasis ExtendBasis(const GroebnerBasis& base, std::span<const Polynomial> extra,
                          BuchbergerStats* stats) {
  BuchbergerRun run(base.ring(), stats);
  for (const Polynomial& g : base.polynomials()) run.AddTrusted(g);
  for (const Polynomial& f : extra) run.AddGenerator(f);
  run.Run();
  return run.Finish();
}

bool SatisfiesBuchbergerCriterion(const GroebnerBasis& gb) {
  const auto& polys = gb.polynomials();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (!gb.normal_form(SPolynomial(polys[i], polys[j])).is_zero()) return false;
    }
  }
  return true;
}

bool IsReduced(const GroebnerBasis& gb) {
  const auto& polys = gb.polynomials();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero() || polys[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : polys[i].terms()) {
        if (polys[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

Footprint::Footprint(RingPtr ring, std::vector<Monomial> sorted_monomials)
    : ring_(std::move(ring)), monomials_(std::move(sorted_monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> Footprint::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Footprint::require_index(const Monomial& m) const {
  auto idx = index_of(m);
  if (!idx) {
    throw Error(Errc::kMonomialOutsideFootprint, ring_->format(m) + " is not in the footprint");
  }
  return *idx;
}

Footprint ComputeFootprint(const GroebnerBasis& gb) {
  const RingPtr& ring = gb.ring();
  const std::size_t nv = ring->nvars();
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb.polynomials()) lms.push_back(g.leading_monomial());

  std::vector<unsigned> bound(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (const Monomial& m : lms) {
      bool pure = true;
      for (std::size_t w = 0; w < nv; ++w) {
        if (w != v && m[w] != 0) pure = false;
      }
      if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    if (bound[v] == 0 && !gb.is_unit_ideal()) {
      throw Error(Errc::kInfiniteFootprint,
                  "no leading monomial is a power of " + ring->variables()[v]);
    }
  }
  std::vector<Monomial> out;
  if (gb.is_unit_ideal()) return Footprint(ring, {});

  std::vector<unsigned> exps(nv, 0);
  for (;;) {
    const Monomial m = Monomial::FromExponents(exps);
    bool divisible = false;
    for (const Monomial& lm : lms) {
      if (lm.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) out.push_back(m);
    std::size_t v = 0;
    while (v < nv && ++exps[v] == bound[v]) exps[v++] = 0;
    if (v == nv) break;
  }
  const MonomialOrder& order = ring->order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return Footprint(ring, std::move(out));
}

}  // namespace varcodes
