// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <memory>

namespace varcodes::testing {

const InstanceBundle& Klein() {
  static const std::unique_ptr<InstanceBundle> bundle = InstanceBundle::Load(ResolveBundlePath("klein"));
  return *bundle;
}

Elem RandomElem(const FieldSpec& f, Rng& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<unsigned>(0, f.size() - 1)(rng));
}

Elem RandomNonzero(const FieldSpec& f, Rng& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<unsigned>(1, f.size() - 1)(rng));
}

Vec RandomVec(const FieldSpec& f, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& x : v) x = RandomElem(f, rng);
  return v;
}

Polynomial RandomFootprintPoly(const Footprint& fp, Rng& rng, double density) {
  const FieldSpec& f = fp.ring()->f();
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  for (const Monomial& m : fp.monomials()) {
    if (keep(rng)) terms.push_back({m, RandomNonzero(f, rng)});
  }
  return Polynomial::FromTerms(fp.ring(), std::move(terms));
}

Polynomial RandomWithLeading(const Footprint& fp, std::size_t lead, Rng& rng) {
  const FieldSpec& f = fp.ring()->f();
  std::vector<Term> terms = {{fp[lead], 1}};
  for (std::size_t i = 0; i < lead; ++i) {
    const Elem c = RandomElem(f, rng);
    if (c != 0) terms.push_back({fp[i], c});
  }
  return Polynomial::FromTerms(fp.ring(), std::move(terms));
}

Monomial RandomMonomial(std::size_t nvars, unsigned max_exp, Rng& rng) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<unsigned> exps(nvars);
  for (auto& x : exps) x = e(rng);
  return Monomial::FromExponents(exps);
}

Polynomial RandomDensePoly(const RingPtr& ring, unsigned max_exp, std::size_t terms, Rng& rng) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < terms; ++i) {
    t.push_back({RandomMonomial(ring->nvars(), max_exp, rng), RandomNonzero(ring->f(), rng)});
  }
  return Polynomial::FromTerms(ring, std::move(t));
}

Elem ShiftAddMul(Elem x, Elem y, const std::vector<unsigned>& modulus) {
  const unsigned m = static_cast<unsigned>(modulus.size()) - 1;
  unsigned mod_bits = 0;
  for (unsigned c : modulus) mod_bits = (mod_bits << 1) | (c & 1u);
  unsigned acc = 0;
  for (unsigned bit = 0; bit < m; ++bit) {
    if (y & (1u << bit)) acc ^= static_cast<unsigned>(x) << bit;
  }
  for (int bit = 2 * static_cast<int>(m) - 2; bit >= static_cast<int>(m); --bit) {
    if (acc & (1u << bit)) acc ^= mod_bits << (bit - m);
  }
  return static_cast<Elem>(acc);
}

std::vector<Point> BruteForceZeros(const FieldSpec& f, const std::vector<Polynomial>& generators) {
  std::vector<Point> out;
  for (unsigned x = 0; x < f.size(); ++x) {
    for (unsigned y = 0; y < f.size(); ++y) {
      const Point p = {static_cast<Elem>(x), static_cast<Elem>(y)};
      bool zero = true;
      for (const auto& g : generators) zero = zero && g.evaluate(p) == 0;
      if (zero) out.push_back(p);
    }
  }
  return out;
}

namespace {

// Calls visit(word, message) for every message in F_q^k, odometer order.
template <typename Visit>
void ForEachMessage(const FieldSpec& f, const Matrix& g, Visit visit) {
  const std::size_t k = g.rows(), n = g.cols();
  Vec msg(k, 0);
  while (true) {
    Vec word(n, 0);
    for (std::size_t r = 0; r < k; ++r) {
      if (msg[r] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(msg[r], g.at(r, c)));
    }
    visit(word, msg);
    std::size_t pos = 0;
    while (pos < k && ++msg[pos] == f.size()) msg[pos++] = 0;
    if (pos == k) break;
  }
}

}  // namespace

std::size_t NaiveMinDistance(const FieldSpec& f, const Matrix& g) {
  std::size_t best = g.cols() + 1;
  ForEachMessage(f, g, [&](const Vec& w, const Vec&) {
    const std::size_t wt = HammingWeight(w);
    if (wt > 0) best = std::min(best, wt);
  });
  return best;
}

std::size_t NaiveRelativeDistance(const FieldSpec& f, const Matrix& inner, const Matrix& extra) {
  std::vector<Vec> rows = extra.row_list();
  for (const Vec& r : inner.row_list()) rows.push_back(r);
  const Matrix g = Matrix::FromRows(extra.cols(), rows);
  std::size_t best = g.cols() + 1;
  ForEachMessage(f, g, [&](const Vec& w, const Vec& msg) {
    bool outside = false;
    for (std::size_t r = 0; r < extra.rows(); ++r) outside = outside || msg[r] != 0;
    if (outside) best = std::min(best, HammingWeight(w));
  });
  return best;
}

std::vector<std::uint64_t> NaiveWeightDistribution(const FieldSpec& f, const Matrix& g) {
  std::vector<std::uint64_t> a(g.cols() + 1, 0);
  ForEachMessage(f, g, [&](const Vec& w, const Vec&) { ++a[HammingWeight(w)]; });
  return a;
}

Matrix RandomFullRank(const FieldSpec& f, std::size_t k, std::size_t n, Rng& rng) {
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(RandomVec(f, n, rng));
    Matrix m = Matrix::FromRows(n, rows);
    if (Rank(f, m) == k) return m;
  }
}

std::string MakeTempDir(const std::string& stem) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() /
                   (stem + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace varcodes::testing
