// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "enumerate.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

namespace varcodes::internal {
namespace {

// Digits directly below the top index that are fixed per work unit. Fixed,
// so the unit decomposition (and hence the reported witness) does not
// depend on the number of threads.
constexpr std::size_t kSplitDigits = 2;

struct Unit {
  std::size_t top;
  std::size_t fixed;     // number of fixed digits below top
  std::uint64_t prefix;  // their values, base q, digit top-1 most significant
};

struct UnitResult {
  std::size_t min_weight = SIZE_MAX;
  Vec message;
  std::vector<std::uint64_t> histogram;
  std::uint64_t visited = 0;
};

// Words as m bit planes of a 64-bit mask (p = 2, n <= 64).
template <int M>
struct PlaneBackend {
  using Word = std::array<std::uint64_t, M>;

  static Word Encode(const Vec& v) {
    Word w{};
    for (std::size_t j = 0; j < v.size(); ++j) {
      for (int b = 0; b < M; ++b) {
        if ((v[j] >> b) & 1) w[b] |= std::uint64_t{1} << j;
      }
    }
    return w;
  }
  static void Add(const FieldSpec&, Word& w, const Word& d) {
    for (int b = 0; b < M; ++b) w[b] ^= d[b];
  }
  static std::size_t Weight(const Word& w) {
    std::uint64_t any = 0;
    for (int b = 0; b < M; ++b) any |= w[b];
    return static_cast<std::size_t>(std::popcount(any));
  }
};

struct GenericBackend {
  using Word = Vec;

  static Word Encode(const Vec& v) { return v; }
  static void Add(const FieldSpec& f, Word& w, const Word& d) {
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], d[j]);
  }
  static std::size_t Weight(const Word& w) { return HammingWeight(w); }
};

template <typename Backend>
class Engine {
 public:
  using Word = typename Backend::Word;

  Engine(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t n, bool histogram)
      : f_(f), q_(f.size()), n_(n), histogram_(histogram) {
    multiples_.resize(rows.size());
    steps_.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (unsigned c = 0; c < q_; ++c) {
        Vec scaled(n);
        for (std::size_t j = 0; j < n; ++j) scaled[j] = f.mul(static_cast<Elem>(c), rows[i][j]);
        multiples_[i].push_back(Backend::Encode(scaled));
      }
      // Gray digit g -> g+1 (mod q) changes the coefficient by this amount.
      for (unsigned g = 0; g < q_; ++g) {
        const Elem delta = f.sub(static_cast<Elem>((g + 1) % q_), static_cast<Elem>(g));
        steps_[i].push_back(multiples_[i][delta]);
      }
    }
  }

  UnitResult Run(const Unit& unit) const {
    UnitResult res;
    if (histogram_) res.histogram.assign(n_ + 1, 0);
    const std::size_t free = unit.top - unit.fixed;
    Vec coeff(unit.top + 1, 0);
    coeff[unit.top] = 1;
    Word word = multiples_[unit.top][1];
    std::uint64_t prefix = unit.prefix;
    for (std::size_t d = 0; d < unit.fixed; ++d) {
      const std::size_t row = free + d;
      coeff[row] = static_cast<Elem>(prefix % q_);
      prefix /= q_;
      Backend::Add(f_, word, multiples_[row][coeff[row]]);
    }

    std::vector<unsigned> counter(free + 1, 0);
    auto visit = [&]() {
      const std::size_t w = Backend::Weight(word);
      ++res.visited;
      if (histogram_) ++res.histogram[w];
      if (w < res.min_weight) {
        res.min_weight = w;
        res.message = coeff;
      }
    };
    visit();
    for (;;) {
      std::size_t i = 0;
      while (i < free && counter[i] == q_ - 1) counter[i++] = 0;
      if (i == free) break;
      ++counter[i];
      // coeff[i] holds the Gray digit itself (encodings double as Z_q).
      Backend::Add(f_, word, steps_[i][coeff[i]]);
      coeff[i] = static_cast<Elem>((coeff[i] + 1) % q_);
      visit();
    }
    return res;
  }

 private:
  const FieldSpec& f_;
  unsigned q_;
  std::size_t n_;
  bool histogram_;
  std::vector<std::vector<Word>> multiples_;
  std::vector<std::vector<Word>> steps_;
};

std::uint64_t IPow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

template <typename Backend>
EnumerationSummary RunAll(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t n,
                          std::size_t lo, bool histogram, unsigned jobs) {
  const Engine<Backend> engine(f, rows, n, histogram);
  std::vector<Unit> units;
  for (std::size_t t = lo; t < rows.size(); ++t) {
    const std::size_t fixed = std::min(t, kSplitDigits);
    const std::uint64_t count = IPow(f.size(), fixed);
    for (std::uint64_t p = 0; p < count; ++p) units.push_back({t, fixed, p});
  }
  std::vector<UnitResult> results(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t u; (u = next.fetch_add(1)) < units.size();) results[u] = engine.Run(units[u]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(units.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  EnumerationSummary out;
  if (histogram) out.histogram.assign(n + 1, 0);
  for (UnitResult& r : results) {
    out.visited += r.visited;
    if (r.min_weight < out.min_weight) {
      out.min_weight = r.min_weight;
      out.witness_message = std::move(r.message);
      out.witness_message.resize(rows.size(), 0);
    }
    if (histogram) {
      for (std::size_t w = 0; w <= n; ++w) out.histogram[w] += r.histogram[w];
    }
  }
  return out;
}

}  // namespace

std::uint64_t CountWords(unsigned q, std::size_t k, std::size_t lo) {
  std::uint64_t total = 0;
  for (std::size_t t = lo; t < k; ++t) total += IPow(q, t);
  return total;
}

EnumerationSummary EnumerateWords(const FieldSpec& f, const std::vector<Vec>& rows,
                                  std::size_t n, std::size_t lo, bool histogram,
                                  unsigned jobs) {
  if (f.characteristic() == 2 && n <= 64) {
    switch (f.degree()) {
      case 1: return RunAll<PlaneBackend<1>>(f, rows, n, lo, histogram, jobs);
      case 2: return RunAll<PlaneBackend<2>>(f, rows, n, lo, histogram, jobs);
      case 3: return RunAll<PlaneBackend<3>>(f, rows, n, lo, histogram, jobs);
      case 4: return RunAll<PlaneBackend<4>>(f, rows, n, lo, histogram, jobs);
      case 5: return RunAll<PlaneBackend<5>>(f, rows, n, lo, histogram, jobs);
      case 6: return RunAll<PlaneBackend<6>>(f, rows, n, lo, histogram, jobs);
      case 7: return RunAll<PlaneBackend<7>>(f, rows, n, lo, histogram, jobs);
      case 8: return RunAll<PlaneBackend<8>>(f, rows, n, lo, histogram, jobs);
      default: break;
    }
  }
  return RunAll<GenericBackend>(f, rows, n, lo, histogram, jobs);
}

}  // namespace varcodes::internal
