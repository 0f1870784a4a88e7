// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/linear_code.h"

#include <cstdlib>
#include <string>
#include <utility>

#include "enumerate.h"

namespace varcodes {

using boost::multiprecision::cpp_int;

namespace {

// Rows of m that form a basis of its row space, in their original order.
Matrix IndependentRows(const FieldSpec& f, const Matrix& m) {
  std::vector<Vec> kept;
  Matrix echelon(0, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Vec> trial = echelon.row_list();
    trial.push_back(m.row_vec(r));
    Matrix t = Matrix::FromRows(m.cols(), trial);
    if (Rank(f, t) > echelon.rows()) {
      kept.push_back(m.row_vec(r));
      echelon = RowSpaceBasis(f, std::move(t));
    }
  }
  return Matrix::FromRows(m.cols(), kept);
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, std::size_t n, Matrix generators, std::string label,
                       CodeProvenance provenance)
    : field_(std::move(field)), n_(n), label_(std::move(label)),
      provenance_(std::move(provenance)) {
  if (generators.rows() > 0 && generators.cols() != n) {
    throw Error(Errc::kLengthMismatch, "generator rows have length " +
                                           std::to_string(generators.cols()) + ", code length " +
                                           std::to_string(n));
  }
  if (generators.rows() == 0) {
    generator_ = Matrix(0, n);
  } else if (Rank(*field_, generators) == generators.rows()) {
    generator_ = std::move(generators);
  } else {
    generator_ = IndependentRows(*field_, generators);
  }
}

LinearCode LinearCode::Zero(FieldPtr field, std::size_t n) {
  return LinearCode(std::move(field), n, Matrix(0, n), "{0}");
}

LinearCode LinearCode::Full(FieldPtr field, std::size_t n) {
  return LinearCode(std::move(field), n, Matrix::Identity(n), "F_q^n");
}

LinearCode LinearCode::with_label(std::string label) const {
  LinearCode c = *this;
  c.label_ = std::move(label);
  return c;
}

bool LinearCode::contains(std::span<const Elem> word) const {
  Matrix w(1, n_);
  std::copy(word.begin(), word.end(), w.row(0).begin());
  return RowSpaceContains(*field_, generator_, w);
}

bool LinearCode::contains(const LinearCode& sub) const {
  return RowSpaceContains(*field_, generator_, sub.generator_);
}

bool LinearCode::same_code(const LinearCode& other) const {
  return dimension() == other.dimension() && contains(other);
}

LinearCode PrimaryCode(const Variety& v, const Footprint& fp, std::span<const Monomial> l,
                       std::string label) {
  for (const Monomial& m : l) fp.require_index(m);
  CodeProvenance prov{CodeProvenance::Kind::kPrimary, {l.begin(), l.end()}};
  return LinearCode(v.ring()->field(), v.size(), EvaluationMatrix(v, l), std::move(label),
                    std::move(prov));
}

LinearCode DualCode(const LinearCode& c, std::string label) {
  const std::size_t n = c.length();
  Matrix gen;
  if (c.dimension() == 0) {
    gen = Matrix::Identity(n);
  } else {
    gen = Matrix::FromRows(n, NullSpace(*c.field(), c.generator()));
    if (gen.rows() == 0) gen = Matrix(0, n);
  }
  CodeProvenance prov = c.provenance();
  using Kind = CodeProvenance::Kind;
  if (prov.kind == Kind::kPrimary) {
    prov.kind = Kind::kDual;
  } else if (prov.kind == Kind::kDual) {
    prov.kind = Kind::kPrimary;
  }
  return LinearCode(c.field(), n, std::move(gen), std::move(label), std::move(prov));
}

LinearCode DualVarietyCode(const Variety& v, const Footprint& fp, std::span<const Monomial> l,
                           std::string label) {
  return DualCode(PrimaryCode(v, fp, l), std::move(label));
}

WeightDistribution MacWilliams(const WeightDistribution& a, std::size_t k, std::size_t n,
                               unsigned q) {
  if (a.size() != n + 1) {
    throw Error(Errc::kLengthMismatch, "distribution has " + std::to_string(a.size()) +
                                           " entries for length " + std::to_string(n));
  }
  // binom[i][j]
  std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  std::vector<cpp_int> qpow(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (q - 1);
  cpp_int size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= q;

  WeightDistribution b(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    cpp_int sum = 0;
    for (std::size_t w = 0; w <= n; ++w) {
      if (a[w] == 0) continue;
      // Krawtchouk K_j(w).
      cpp_int kr = 0;
      for (std::size_t s = 0; s <= j && s <= w; ++s) {
        if (j - s > n - w) continue;
        cpp_int term = binom[w][s] * binom[n - w][j - s] * qpow[j - s];
        if (s % 2) kr -= term; else kr += term;
      }
      sum += a[w] * kr;
    }
    if (sum % size != 0 || sum < 0) {
      throw Error(Errc::kNonIntegralResult,
                  "transformed count at weight " + std::to_string(j) + " is not a non-negative integer");
    }
    b[j] = sum / size;
  }
  return b;
}

std::string StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kAuto: return "auto";
    case Strategy::kDirect: return "direct";
    case Strategy::kMacWilliams: return "macwilliams";
  }
  return "?";
}

Strategy ParseStrategy(const std::string& s) {
  if (s == "auto") return Strategy::kAuto;
  if (s == "direct") return Strategy::kDirect;
  if (s == "macwilliams") return Strategy::kMacWilliams;
  throw Error(Errc::kSyntaxError, "unknown strategy '" + s + "'");
}

unsigned DefaultBudget() {
  if (const char* env = std::getenv("VARCODES_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<unsigned>(v);
  }
  return 9;
}

namespace {

void RequireBudget(std::size_t dim, unsigned budget, const std::string& what) {
  if (dim > budget) {
    throw Error(Errc::kBudgetExceeded, what + " needs dimension " + std::to_string(dim) +
                                           " > budget " + std::to_string(budget));
  }
}

Vec Combine(const FieldSpec& f, const std::vector<Vec>& rows, const Vec& coeff, std::size_t n) {
  Vec w(n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeff[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(coeff[i], rows[i][j]));
  }
  return w;
}

WeightDistribution FromHistogram(const std::vector<std::uint64_t>& hist, unsigned q) {
  WeightDistribution a(hist.size(), 0);
  a[0] = 1;
  for (std::size_t w = 1; w < hist.size(); ++w) a[w] = cpp_int(hist[w]) * (q - 1);
  return a;
}

std::size_t FirstPositive(const WeightDistribution& a) {
  for (std::size_t w = 1; w < a.size(); ++w) {
    if (a[w] > 0) return w;
  }
  throw Error(Errc::kEmptySet, "code has no nonzero words");
}

}  // namespace

WeightDistribution DirectWeightDistribution(const LinearCode& c, const EnumerationOptions& opts) {
  RequireBudget(c.dimension(), opts.budget, "enumerating " + c.label());
  const auto rows = c.generator().row_list();
  const auto s = internal::EnumerateWords(*c.field(), rows, c.length(), 0, true, opts.jobs);
  if (c.dimension() == 0) {
    WeightDistribution a(c.length() + 1, 0);
    a[0] = 1;
    return a;
  }
  return FromHistogram(s.histogram, c.field()->size());
}

WeightDistribution ComputeWeightDistribution(const LinearCode& c, const EnumerationOptions& opts) {
  const std::size_t k = c.dimension(), n = c.length();
  const bool direct = opts.strategy == Strategy::kDirect ||
                      (opts.strategy == Strategy::kAuto && k <= opts.budget);
  if (direct) return DirectWeightDistribution(c, opts);
  const LinearCode dual = DualCode(c);
  RequireBudget(n - k, opts.budget, "enumerating the dual of " + c.label());
  return MacWilliams(DirectWeightDistribution(dual, opts), n - k, n, c.field()->size());
}

DistanceResult MinDistance(const LinearCode& c, const EnumerationOptions& opts) {
  const std::size_t k = c.dimension(), n = c.length();
  if (k == 0) throw Error(Errc::kEmptySet, "the zero code has no minimum distance");
  Strategy s = opts.strategy;
  if (s == Strategy::kAuto) {
    if (k <= opts.budget) {
      s = Strategy::kDirect;
    } else if (n - k <= opts.budget) {
      s = Strategy::kMacWilliams;
    } else {
      RequireBudget(std::min(k, n - k), opts.budget, "distance of " + c.label());
    }
  }
  DistanceResult res;
  res.strategy = s;
  if (s == Strategy::kDirect) {
    RequireBudget(k, opts.budget, "direct enumeration of " + c.label());
    const auto rows = c.generator().row_list();
    const auto sum = internal::EnumerateWords(*c.field(), rows, n, 0, false, opts.jobs);
    res.distance = sum.min_weight;
    res.witness = Combine(*c.field(), rows, sum.witness_message, n);
    res.enumerated = sum.visited;
    return res;
  }
  RequireBudget(n - k, opts.budget, "enumerating the dual of " + c.label());
  const LinearCode dual = DualCode(c);
  const WeightDistribution a = DirectWeightDistribution(dual, opts);
  res.distance = FirstPositive(MacWilliams(a, n - k, n, c.field()->size()));
  res.enumerated = internal::CountWords(c.field()->size(), n - k, 0);
  return res;
}

DistanceResult RelativeDistance(const LinearCode& outer, const LinearCode& inner,
                                const EnumerationOptions& opts) {
  const FieldSpec& f = *outer.field();
  const std::size_t n = outer.length();
  if (inner.length() != n) throw Error(Errc::kLengthMismatch, "codes have different lengths");
  if (!outer.contains(inner)) {
    throw Error(Errc::kNotNested, inner.label() + " is not contained in " + outer.label());
  }
  const std::size_t k1 = outer.dimension(), k2 = inner.dimension();
  if (k1 == k2) throw Error(Errc::kNotNested, inner.label() + " equals " + outer.label());

  Strategy s = opts.strategy;
  if (s == Strategy::kAuto) {
    auto cheap = [&](std::size_t k) { return std::min(k, n - k) <= opts.budget; };
    if (k1 <= opts.budget) {
      s = Strategy::kDirect;
    } else if (cheap(k1) && cheap(k2)) {
      s = Strategy::kMacWilliams;
    } else {
      RequireBudget(k1, opts.budget, "relative distance of " + outer.label());
    }
  }
  DistanceResult res;
  res.strategy = s;
  if (s == Strategy::kDirect) {
    RequireBudget(k1, opts.budget, "direct enumeration of " + outer.label());
    // Basis of inner followed by a completion to a basis of outer; words
    // using a completion row are exactly the words outside inner.
    std::vector<Vec> rows = inner.generator().row_list();
    for (std::size_t r = 0; r < k1 && rows.size() < k1; ++r) {
      std::vector<Vec> trial = rows;
      trial.push_back(outer.generator().row_vec(r));
      if (Rank(f, Matrix::FromRows(n, trial)) == trial.size()) rows = std::move(trial);
    }
    const auto sum = internal::EnumerateWords(f, rows, n, k2, false, opts.jobs);
    res.distance = sum.min_weight;
    res.witness = Combine(f, rows, sum.witness_message, n);
    res.enumerated = sum.visited;
    return res;
  }
  // A_w(outer) - A_w(inner) counts the words of outer \ inner of weight w.
  EnumerationOptions sub = opts;
  sub.strategy = Strategy::kAuto;
  const WeightDistribution a1 = ComputeWeightDistribution(outer, sub);
  const WeightDistribution a2 = ComputeWeightDistribution(inner, sub);
  for (std::size_t w = 1; w <= n; ++w) {
    if (a1[w] > a2[w]) {
      res.distance = w;
      break;
    }
  }
  auto cost = [&](std::size_t k) { return internal::CountWords(f.size(), std::min(k, n - k), 0); };
  res.enumerated = cost(k1) + cost(k2);
  return res;
}

}  // namespace varcodes
