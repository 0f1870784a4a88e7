// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/bounds.h"

#include <algorithm>
#include <atomic>
#include <climits>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

namespace varcodes {

IndexSet ToIndexSet(const Footprint& fp, std::span<const Monomial> monomials) {
  IndexSet out;
  for (const Monomial& m : monomials) out.push_back(fp.require_index(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Monomial> ToMonomials(const Footprint& fp, const IndexSet& s) {
  std::vector<Monomial> out;
  for (std::size_t i : s) {
    if (i >= fp.size()) throw Error(Errc::kIndexOutOfRange, "footprint index " + std::to_string(i));
    out.push_back(fp[i]);
  }
  return out;
}

std::string FormatMonomials(const PolyRing& ring, std::span<const Monomial> ms) {
  std::string s = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ", ";
    s += ring.format(ms[i]);
  }
  return s + "}";
}

std::vector<Monomial> DivisorClosure(const Footprint& fp, std::span<const Monomial> generators) {
  for (const Monomial& n : generators) fp.require_index(n);
  std::vector<Monomial> out;
  for (const Monomial& m : fp.monomials()) {
    for (const Monomial& n : generators) {
      if (n.divides(m)) {
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

std::vector<Monomial> DivisorsInFootprint(const Footprint& fp, const Monomial& m) {
  std::vector<Monomial> out;
  for (const Monomial& d : fp.monomials()) {
    if (d.divides(m)) out.push_back(d);
  }
  return out;
}

std::vector<Monomial> BoxOf(const GroebnerBasis& gb, const Footprint& fp, const Polynomial& f) {
  const Polynomial extra[] = {f};
  const GroebnerBasis augmented = ExtendBasis(gb, extra);
  if (augmented.is_unit_ideal()) return fp.monomials();
  const Footprint smaller = ComputeFootprint(augmented);
  std::vector<Monomial> out;
  for (const Monomial& m : fp.monomials()) {
    if (!smaller.contains(m)) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> BoxOf(const IdealSpec& ideal, const Polynomial& f) {
  const GroebnerBasis gb = Buchberger(ideal);
  return BoxOf(gb, ComputeFootprint(gb), f);
}

BoxOracle::BoxOracle(const Variety& v, const GroebnerBasis& gb, const Footprint& fp)
    : gb_(&gb), fp_(&fp), ev_(EvaluationMatrix(v, fp.monomials())), lagrange_(v.size(), fp.size()) {
  if (v.size() != fp.size()) {
    throw Error(Errc::kLengthMismatch, "variety and footprint differ in size");
  }
  const Interpolator interp(v, gb);
  for (std::size_t s = 0; s < v.size(); ++s) {
    for (std::size_t j = 0; j < fp.size(); ++j) lagrange_.at(s, j) = interp.lagrange(s).coefficient(fp[j]);
  }
}

std::vector<char> BoxOracle::mask(const Polynomial& f) const {
  const FieldSpec& field = fp_->ring()->f();
  const std::size_t n = fp_->size();
  const bool reduced = std::all_of(f.terms().begin(), f.terms().end(),
                                   [&](const Term& t) { return fp_->contains(t.monomial); });
  const Polynomial nf = reduced ? f : gb_->normal_form(f);
  Vec value(n, 0);
  for (const Term& t : nf.terms()) {
    const std::size_t j = *fp_->index_of(t.monomial);
    for (std::size_t s = 0; s < n; ++s) value[s] = field.add(value[s], field.mul(t.coeff, ev_.at(j, s)));
  }
  // Echelon form keyed by the highest nonzero column.
  std::vector<Vec> pivot(n);
  std::vector<char> out(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (value[s] == 0) continue;
    Vec row = lagrange_.row_vec(s);
    for (std::size_t c = n; c-- > 0;) {
      if (row[c] == 0) continue;
      if (pivot[c].empty()) {
        out[c] = 1;
        pivot[c] = std::move(row);
        break;
      }
      const Elem factor = field.div(row[c], pivot[c][c]);
      for (std::size_t k = 0; k <= c; ++k) row[k] = field.sub(row[k], field.mul(factor, pivot[c][k]));
    }
  }
  return out;
}

std::vector<Monomial> BoxOracle::box(const Polynomial& f) const {
  const std::vector<char> m = mask(f);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.push_back((*fp_)[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial CaseTable::build(const Footprint& fp, std::span<const Elem> a) const {
  std::vector<Term> terms{{leading, 1}};
  for (std::size_t u = 1; u <= num_coefficients(); ++u) {
    if (a[u - 1] != 0) terms.push_back({fp[leading_index - u], a[u - 1]});
  }
  return Polynomial::FromTerms(ring, std::move(terms));
}

std::optional<std::size_t> CaseTable::first_match(std::span<const Elem> a) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].matches(a)) return r;
  }
  return std::nullopt;
}

namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> Split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + sep.size();
  }
}

class TableParser {
 public:
  TableParser(const Footprint& fp, std::string name) : fp_(fp), name_(std::move(name)) {}

  CaseTable Parse(std::istream& in) {
    CaseTable t;
    t.name = name_;
    t.ring = fp_.ring();
    bool have_leading = false;
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      const std::string s = Trim(raw);
      if (s.empty() || s[0] == '#') continue;
      const auto colon = s.find(':');
      if (colon == std::string::npos) Fail("expected 'key: value'");
      const std::string key = Trim(std::string_view(s).substr(0, colon));
      const std::string value = Trim(std::string_view(s).substr(colon + 1));
      if (key == "leading") {
        t.leading = Monomial1(value);
        t.leading_index = fp_.require_index(t.leading);
        have_leading = true;
      } else if (key == "row") {
        if (!have_leading) Fail("row before leading");
        t.rows.push_back(Row(value, t.num_coefficients()));
      } else if (key == "intersection") {
        t.intersection = MonomialList(value);
      } else {
        Fail("unknown key '" + key + "'");
      }
    }
    if (!have_leading) Fail("missing leading monomial");
    if (t.rows.empty()) Fail("table has no rows");
    return t;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw Error(Errc::kSyntaxError, name_ + ":" + std::to_string(line_) + ": " + why);
  }

  Monomial Monomial1(const std::string& text) const {
    const Monomial m = fp_.ring()->parse_monomial(text);
    fp_.require_index(m);
    return m;
  }

  std::vector<Monomial> MonomialList(const std::string& text) const {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') Fail("expected [..]");
    std::vector<Monomial> out;
    for (const std::string& item : Split(std::string_view(text).substr(1, text.size() - 2), ",")) {
      if (item.empty()) Fail("empty monomial in list");
      out.push_back(Monomial1(item));
    }
    return out;
  }

  // "a12" -> 12, or nullopt for a constant.
  std::optional<unsigned> Coefficient(const std::string& tok, std::size_t ncoeff) const {
    static const std::regex re("a([0-9]+)");
    std::smatch m;
    if (!std::regex_match(tok, m, re)) return std::nullopt;
    const unsigned u = static_cast<unsigned>(std::stoul(m[1]));
    if (u == 0 || u > ncoeff) {
      Fail("coefficient " + tok + " outside a1..a" + std::to_string(ncoeff));
    }
    return u;
  }

  Elem Constant(const std::string& tok) const { return fp_.ring()->f().parse(tok); }

  CaseRow Row(const std::string& text, std::size_t ncoeff) const {
    CaseRow row;
    row.source = text;
    row.line = line_;
    const auto arrow = text.find("->");
    if (arrow == std::string::npos) Fail("row without '->'");
    const std::string lhs = Trim(std::string_view(text).substr(0, arrow));
    row.claim = MonomialList(Trim(std::string_view(text).substr(arrow + 2)));
    if (lhs == "*") return row;
    using Op = CoefficientConstraint::Op;
    for (const std::string& term : Split(lhs, "&")) {
      if (const auto pos = term.find("notin"); pos != std::string::npos) {
        const auto u = Coefficient(Trim(std::string_view(term).substr(0, pos)), ncoeff);
        std::string set = Trim(std::string_view(term).substr(pos + 5));
        if (!u || set.size() < 2 || set.front() != '{' || set.back() != '}') {
          Fail("malformed 'notin' term '" + term + "'");
        }
        for (const std::string& c : Split(std::string_view(set).substr(1, set.size() - 2), ",")) {
          row.constraints.push_back({*u, Op::kNe, std::nullopt, Constant(c)});
        }
      } else if (const auto ne = term.find("!="); ne != std::string::npos) {
        const auto u = Coefficient(Trim(std::string_view(term).substr(0, ne)), ncoeff);
        const std::string rhs = Trim(std::string_view(term).substr(ne + 2));
        if (!u) Fail("left side of '!=' must be a coefficient in '" + term + "'");
        if (const auto v = Coefficient(rhs, ncoeff)) {
          row.constraints.push_back({*u, Op::kNe, v, 0});
        } else {
          row.constraints.push_back({*u, Op::kNe, std::nullopt, Constant(rhs)});
        }
      } else if (term.find('=') != std::string::npos) {
        std::vector<unsigned> coeffs;
        std::optional<Elem> constant;
        for (const std::string& tok : Split(term, "=")) {
          if (const auto v = Coefficient(tok, ncoeff)) {
            coeffs.push_back(*v);
          } else {
            const Elem c = Constant(tok);
            if (constant && *constant != c) Fail("contradictory chain '" + term + "'");
            constant = c;
          }
        }
        if (coeffs.empty()) Fail("chain without coefficients '" + term + "'");
        if (constant) {
          for (unsigned u : coeffs) row.constraints.push_back({u, Op::kEq, std::nullopt, *constant});
        } else {
          for (std::size_t i = 1; i < coeffs.size(); ++i) {
            row.constraints.push_back({coeffs[i - 1], Op::kEq, coeffs[i], 0});
          }
        }
      } else {
        Fail("cannot read constraint '" + term + "'");
      }
    }
    return row;
  }

  const Footprint& fp_;
  std::string name_;
  int line_ = 0;
};

// Assignment number -> coefficient vector, a1 least significant.
void Decode(std::uint64_t index, unsigned q, Vec& a) {
  for (Elem& x : a) {
    x = static_cast<Elem>(index % q);
    index /= q;
  }
}

std::vector<char> Mask(const Footprint& fp, std::span<const Monomial> ms) {
  std::vector<char> mask(fp.size(), 0);
  for (const Monomial& m : ms) mask[fp.require_index(m)] = 1;
  return mask;
}

std::vector<Monomial> Missing(const Footprint& fp, const std::vector<Monomial>& closure,
                              const std::vector<char>& box) {
  std::vector<Monomial> out;
  for (const Monomial& m : closure) {
    if (!box[*fp.index_of(m)]) out.push_back(m);
  }
  return out;
}

constexpr std::size_t kMaxReportedViolations = 10;

struct Checker {
  const CaseTable& table;
  const GroebnerBasis& gb;
  const Footprint& fp;
  std::vector<std::vector<Monomial>> closures;
  std::vector<Monomial> intersection;
  const BoxOracle* oracle = nullptr;

  struct Outcome {
    std::vector<Monomial> missing;               // from the row claim
    std::vector<Monomial> intersection_missing;  // from the stated intersection
    bool cross_checked = false;
    bool disagreement = false;
  };

  // `row` is empty for an assignment no row matches; only the
  // intersection is checked then.
  Outcome Check(std::optional<std::size_t> row, std::span<const Elem> a, bool cross_check) const {
    const Polynomial f = table.build(fp, a);
    std::vector<char> box;
    Outcome out;
    if (oracle) {
      box = oracle->mask(f);
      if (cross_check) {
        out.cross_checked = true;
        out.disagreement = Mask(fp, BoxOf(gb, fp, f)) != box;
      }
    } else {
      box = Mask(fp, BoxOf(gb, fp, f));
    }
    if (row) out.missing = Missing(fp, closures[*row], box);
    out.intersection_missing = Missing(fp, intersection, box);
    return out;
  }
};

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// A random assignment satisfying the equalities of `row`; inequalities are
// left to rejection.
Vec SampleRow(const CaseRow& row, std::size_t ncoeff, unsigned q, std::mt19937_64& rng) {
  std::vector<std::size_t> parent(ncoeff);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::size_t, Elem> fixed;
  for (const auto& c : row.constraints) {
    if (c.op != CoefficientConstraint::Op::kEq) continue;
    if (c.rhs_coeff) parent[find(c.lhs - 1)] = find(*c.rhs_coeff - 1);
  }
  for (const auto& c : row.constraints) {
    if (c.op == CoefficientConstraint::Op::kEq && !c.rhs_coeff) fixed[find(c.lhs - 1)] = c.rhs_value;
  }
  Vec root_value(ncoeff);
  for (std::size_t i = 0; i < ncoeff; ++i) root_value[i] = static_cast<Elem>(rng() % q);
  for (const auto& [root, v] : fixed) root_value[root] = v;
  Vec a(ncoeff);
  for (std::size_t i = 0; i < ncoeff; ++i) a[i] = root_value[find(i)];
  return a;
}

}  // namespace

CaseTable ParseCaseTable(std::istream& in, const Footprint& fp, const std::string& name) {
  return TableParser(fp, name).Parse(in);
}

CaseTable LoadCaseTable(const std::string& path, const Footprint& fp, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  return ParseCaseTable(in, fp, name);
}

std::string VerifyModeName(VerifyMode m) {
  switch (m) {
    case VerifyMode::kAuto: return "auto";
    case VerifyMode::kExhaustive: return "exhaustive";
    case VerifyMode::kSample: return "sample";
  }
  return "?";
}

VerifyMode ParseVerifyMode(const std::string& s) {
  if (s == "auto") return VerifyMode::kAuto;
  if (s == "exhaustive") return VerifyMode::kExhaustive;
  if (s == "sample") return VerifyMode::kSample;
  throw Error(Errc::kSyntaxError, "unknown verification mode '" + s + "'");
}

CoverageReport CheckCoverage(const CaseTable& table, std::vector<char>* shadowed) {
  const std::size_t ncoeff = table.num_coefficients();
  const unsigned q = table.ring->f().size();
  std::set<Elem> constants;
  std::vector<std::size_t> parent(ncoeff);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> used(ncoeff, 0);
  for (const CaseRow& row : table.rows) {
    for (const auto& c : row.constraints) {
      used[c.lhs - 1] = 1;
      if (c.rhs_coeff) {
        used[*c.rhs_coeff - 1] = 1;
        parent[find(c.lhs - 1)] = find(*c.rhs_coeff - 1);
      } else {
        constants.insert(c.rhs_value);
      }
    }
  }
  std::map<std::size_t, std::size_t> component_size;
  for (std::size_t i = 0; i < ncoeff; ++i) {
    if (used[i]) ++component_size[find(i)];
  }
  // Per-coefficient alphabets.
  std::vector<std::vector<Elem>> alphabet(ncoeff, std::vector<Elem>{0});
  for (std::size_t i = 0; i < ncoeff; ++i) {
    if (!used[i]) continue;
    std::vector<Elem> al(constants.begin(), constants.end());
    std::size_t fresh = component_size[find(i)];
    for (Elem x = 0; x < q && fresh > 0; ++x) {
      if (!constants.count(x)) {
        al.push_back(x);
        --fresh;
      }
    }
    alphabet[i] = std::move(al);
  }

  CoverageReport rep;
  std::vector<char> owns(table.rows.size(), 0);
  std::vector<std::size_t> digit(ncoeff, 0);
  Vec a(ncoeff, 0);
  for (;;) {
    for (std::size_t i = 0; i < ncoeff; ++i) a[i] = alphabet[i][digit[i]];
    if (auto r = table.first_match(a)) {
      owns[*r] = 1;
    } else if (rep.complete) {
      rep.complete = false;
      rep.gap_example = a;
    }
    std::size_t i = 0;
    while (i < ncoeff && ++digit[i] == alphabet[i].size()) digit[i++] = 0;
    if (i == ncoeff) break;
  }
  if (shadowed) {
    shadowed->assign(table.rows.size(), 0);
    for (std::size_t r = 0; r < owns.size(); ++r) (*shadowed)[r] = !owns[r];
  }
  return rep;
}

TableReport VerifyCaseTable(const CaseTable& table, const GroebnerBasis& gb, const Footprint& fp,
                            const VerifyOptions& opts) {
  const std::size_t ncoeff = table.num_coefficients();
  const unsigned q = table.ring->f().size();
  TableReport rep;
  rep.name = table.name;
  rep.mode = opts.mode;
  if (rep.mode == VerifyMode::kAuto) {
    rep.mode = ncoeff <= opts.auto_exhaustive_max ? VerifyMode::kExhaustive : VerifyMode::kSample;
  }

  Checker checker{table, gb, fp, {}, DivisorClosure(fp, table.intersection)};
  for (const CaseRow& row : table.rows) checker.closures.push_back(DivisorClosure(fp, row.claim));
  std::optional<Variety> variety;
  std::optional<BoxOracle> oracle;
  if (opts.cross_check_stride > 0) {
    variety.emplace(EnumerateVariety(IdealSpec{gb.ring(), gb.polynomials(), false}));
    oracle.emplace(*variety, gb, fp);
    checker.oracle = &*oracle;
  }
  const std::size_t stride = opts.cross_check_stride;

  std::vector<char> shadowed;
  rep.coverage = CheckCoverage(table, &shadowed);
  rep.rows.resize(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    rep.rows[r].row = r;
    rep.rows[r].claim_size = checker.closures[r].size();
    rep.rows[r].shadowed = shadowed[r];
    if (shadowed[r]) {
      rep.warnings.push_back("row " + std::to_string(r + 1) + " (" + table.rows[r].source +
                             ") is never the first matching row");
    }
  }
  if (!rep.coverage.complete) {
    std::string ex;
    for (std::size_t u = 0; u < ncoeff; ++u) {
      ex += (u ? " " : "") + ("a" + std::to_string(u + 1)) + "=" +
            std::to_string((*rep.coverage.gap_example)[u]);
    }
    rep.warnings.push_back("assignments matching no row exist, e.g. " + ex);
  }

  struct Chunk {
    std::vector<std::uint64_t> checked, violations;
    std::vector<CaseViolation> examples;
    std::uint64_t uncovered = 0;
    std::uint64_t intersection_violations = 0;
    std::uint64_t cross_checked = 0, disagreements = 0;
    std::uint64_t seen = 0;
    // Every stride-th assignment of the task goes through both routes.
    bool next_cross_check(std::size_t stride) { return stride > 0 && seen++ % stride == 0; }
  };
  auto new_chunk = [&]() {
    Chunk c;
    c.checked.assign(table.rows.size(), 0);
    c.violations.assign(table.rows.size(), 0);
    return c;
  };
  auto record = [&](Chunk& c, std::size_t row, const Vec& a, Checker::Outcome out) {
    ++c.checked[row];
    c.cross_checked += out.cross_checked;
    c.disagreements += out.disagreement;
    if (!out.intersection_missing.empty()) ++c.intersection_violations;
    if (out.missing.empty()) return;
    ++c.violations[row];
    if (c.examples.size() < kMaxReportedViolations) {
      c.examples.push_back({row, a, std::move(out.missing)});
    }
  };

  std::vector<Chunk> chunks;
  std::vector<std::function<void(Chunk&)>> tasks;
  if (rep.mode == VerifyMode::kExhaustive) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ncoeff; ++i) total *= q;
    const std::uint64_t per = std::max<std::uint64_t>(1, total / 64);
    for (std::uint64_t lo = 0; lo < total; lo += per) {
      const std::uint64_t hi = std::min(total, lo + per);
      tasks.push_back([&, lo, hi](Chunk& c) {
        Vec a(ncoeff);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          Decode(idx, q, a);
          const auto r = table.first_match(a);
          if (!r) {
            ++c.uncovered;
            const auto out = checker.Check(std::nullopt, a, c.next_cross_check(stride));
            c.cross_checked += out.cross_checked;
            c.disagreements += out.disagreement;
            if (!out.intersection_missing.empty()) ++c.intersection_violations;
            continue;
          }
          record(c, *r, a, checker.Check(*r, a, c.next_cross_check(stride)));
        }
      });
    }
  } else {
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (shadowed[r]) continue;
      tasks.push_back([&, r](Chunk& c) {
        std::mt19937_64 rng(SplitMix(opts.seed ^ SplitMix(r + 1)));
        const std::uint64_t max_attempts = 5000 * std::max<std::size_t>(opts.samples, 1);
        std::uint64_t attempts = 0;
        std::size_t taken = 0;
        while (taken < opts.samples && attempts++ < max_attempts) {
          const Vec a = SampleRow(table.rows[r], ncoeff, q, rng);
          if (table.first_match(a) != r) continue;
          record(c, r, a, checker.Check(r, a, c.next_cross_check(stride)));
          ++taken;
        }
      });
    }
  }
  chunks.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) chunks.push_back(new_chunk());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) tasks[t](chunks[t]);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::uint64_t uncovered = 0;
  for (Chunk& c : chunks) {
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      rep.rows[r].checked += c.checked[r];
      rep.rows[r].violations += c.violations[r];
    }
    uncovered += c.uncovered;
    rep.intersection_violations += c.intersection_violations;
    rep.cross_checked += c.cross_checked;
    rep.engine_disagreements += c.disagreements;
    for (CaseViolation& v : c.examples) {
      if (rep.violations.size() < kMaxReportedViolations) rep.violations.push_back(std::move(v));
    }
  }
  std::stable_sort(rep.violations.begin(), rep.violations.end(),
                   [](const CaseViolation& x, const CaseViolation& y) { return x.row < y.row; });
  for (const RowReport& r : rep.rows) {
    rep.total_checked += r.checked;
    rep.total_violations += r.violations;
    if (rep.mode == VerifyMode::kSample && !r.shadowed && r.checked < opts.samples) {
      rep.warnings.push_back("row " + std::to_string(r.row + 1) + ": only " +
                             std::to_string(r.checked) + " samples found");
    }
  }
  if (rep.mode == VerifyMode::kExhaustive) {
    rep.coverage.uncovered = uncovered;
    rep.coverage.complete = uncovered == 0;
  }

  // The stated intersection must lie inside every row closure.
  if (!table.intersection.empty()) {
    std::vector<char> common(fp.size(), 1);
    for (const auto& cl : checker.closures) {
      const std::vector<char> m = Mask(fp, cl);
      for (std::size_t i = 0; i < fp.size(); ++i) common[i] = common[i] && m[i];
    }
    for (const Monomial& m : DivisorClosure(fp, table.intersection)) {
      if (!common[*fp.index_of(m)]) rep.intersection_excess.push_back(m);
    }
    rep.intersection_consistent = rep.intersection_excess.empty();
    if (!rep.intersection_consistent) {
      rep.warnings.push_back("stated intersection is not implied by the row claims; " +
                             FormatMonomials(*fp.ring(), rep.intersection_excess) +
                             " lie outside some row closure");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::string ProvenanceName(BoundProvenance p) {
  switch (p) {
    case BoundProvenance::kDivisibility: return "divisibility";
    case BoundProvenance::kCaseTable: return "case-table";
    case BoundProvenance::kOverride: return "manual-override";
  }
  return "?";
}

std::vector<BoundEntry> SigmaTable(const Footprint& fp, std::span<const CaseTable> tables) {
  std::vector<BoundEntry> out(fp.size());
  for (std::size_t i = 0; i < fp.size(); ++i) {
    const Monomial gens[] = {fp[i]};
    out[i].value = out[i].derived = static_cast<unsigned>(DivisorClosure(fp, gens).size());
  }
  for (const CaseTable& t : tables) {
    BoundEntry& e = out[t.leading_index];
    unsigned best = UINT_MAX;
    for (const CaseRow& row : t.rows) {
      best = std::min(best, static_cast<unsigned>(DivisorClosure(fp, row.claim).size()));
    }
    e.value = e.derived = best;
    e.provenance = BoundProvenance::kCaseTable;
    e.note = t.name;
  }
  return out;
}

std::vector<BoundEntry> MuTable(const Footprint& fp, std::span<const CaseTable> tables,
                                std::span<const MuOverride> overrides) {
  std::vector<std::vector<char>> closure;
  for (const CaseTable& t : tables) closure.push_back(Mask(fp, DivisorClosure(fp, t.intersection)));

  std::vector<BoundEntry> out(fp.size());
  for (std::size_t i = 0; i < fp.size(); ++i) {
    std::vector<char> in(fp.size(), 0);
    for (const Monomial& d : DivisorsInFootprint(fp, fp[i])) in[*fp.index_of(d)] = 1;
    BoundEntry& e = out[i];
    std::vector<std::string> sources;
    for (std::size_t t = 0; t < tables.size(); ++t) {
      if (!closure[t][i]) continue;
      const std::size_t lm = tables[t].leading_index;
      if (!in[lm]) {
        in[lm] = 1;
        sources.push_back(tables[t].name);
      }
    }
    for (std::size_t j = 0; j < fp.size(); ++j) {
      if (in[j] && !fp[j].divides(fp[i])) e.extras.push_back(fp[j]);
    }
    e.value = e.derived = static_cast<unsigned>(std::count(in.begin(), in.end(), 1));
    if (!sources.empty()) {
      e.provenance = BoundProvenance::kCaseTable;
      for (std::size_t s = 0; s < sources.size(); ++s) e.note += (s ? "," : "") + sources[s];
    }
  }
  for (const MuOverride& o : overrides) {
    BoundEntry& e = out[fp.require_index(o.monomial)];
    e.value = o.value;
    e.provenance = BoundProvenance::kOverride;
    e.note = o.note;
  }
  return out;
}

std::vector<unsigned> Values(std::span<const BoundEntry> entries) {
  std::vector<unsigned> v;
  for (const BoundEntry& e : entries) v.push_back(e.value);
  return v;
}

namespace {

void CheckIndices(std::span<const unsigned> values, const IndexSet& s) {
  for (std::size_t i : s) {
    if (i >= values.size()) throw Error(Errc::kIndexOutOfRange, "footprint index " + std::to_string(i));
  }
}

bool StrictSubset(const IndexSet& small, const IndexSet& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

unsigned PrimaryBound(std::span<const unsigned> sigma, const IndexSet& l) {
  CheckIndices(sigma, l);
  if (l.empty()) throw Error(Errc::kEmptySet, "primary bound of an empty monomial set");
  unsigned best = UINT_MAX;
  for (std::size_t i : l) best = std::min(best, sigma[i]);
  return best;
}

unsigned PrimaryRelativeBound(std::span<const unsigned> sigma, const IndexSet& l1,
                              const IndexSet& l2) {
  CheckIndices(sigma, l1);
  CheckIndices(sigma, l2);
  if (!StrictSubset(l2, l1)) throw Error(Errc::kNotNested, "L2 is not a proper subset of L1");
  std::size_t first = SIZE_MAX;
  for (std::size_t i : l1) {
    if (!std::binary_search(l2.begin(), l2.end(), i)) first = std::min(first, i);
  }
  unsigned best = UINT_MAX;
  for (std::size_t i : l1) {
    if (i >= first) best = std::min(best, sigma[i]);
  }
  return best;
}

unsigned DualBound(std::span<const unsigned> mu, const IndexSet& l) {
  CheckIndices(mu, l);
  unsigned best = UINT_MAX;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!std::binary_search(l.begin(), l.end(), i)) best = std::min(best, mu[i]);
  }
  if (best == UINT_MAX) throw Error(Errc::kEmptySet, "dual bound: L is the whole footprint");
  return best;
}

unsigned DualRelativeBound(std::span<const unsigned> mu, const IndexSet& l1, const IndexSet& l2) {
  CheckIndices(mu, l1);
  CheckIndices(mu, l2);
  if (!StrictSubset(l2, l1)) throw Error(Errc::kNotNested, "L2 is not a proper subset of L1");
  const std::size_t last = l1.back();
  unsigned best = UINT_MAX;
  for (std::size_t i = 0; i <= last; ++i) {
    if (!std::binary_search(l2.begin(), l2.end(), i)) best = std::min(best, mu[i]);
  }
  return best;
}

// ---------------------------------------------------------------------------

WeightSpaceReport CheckWeightSpace(const FieldSpec& f, std::span<const Elem> c,
                                   const Matrix& space_basis) {
  WeightSpaceReport rep;
  const std::size_t n = c.size();
  rep.weight = HammingWeight(c);

  std::vector<Vec> std_products;
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] == 0) continue;
    Vec e(n, 0);
    e[j] = 1;
    std_products.push_back(StarProduct(f, c, e));
  }
  rep.standard_space_ok =
      std_products.empty() ? rep.weight == 0 : Rank(f, Matrix::FromRows(n, std_products)) == rep.weight;

  if (space_basis.rows() == 0) return rep;
  if (space_basis.cols() != n) throw Error(Errc::kLengthMismatch, "space and word lengths differ");
  const Matrix basis = RowSpaceBasis(f, space_basis);
  rep.supplied_dimension = basis.rows();
  std::vector<Vec> products;
  for (std::size_t r = 0; r < basis.rows(); ++r) products.push_back(StarProduct(f, c, basis.row(r)));
  // x with sum x_r (c * b_r) = 0 gives v = sum x_r b_r in the annihilator.
  const auto left_null = NullSpace(f, Matrix::FromRows(n, products).transpose());
  if (!left_null.empty()) {
    const Vec& x = left_null.front();
    Vec v(n, 0);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(x[r], basis.at(r, j)));
    }
    rep.annihilator = std::move(v);
  }
  return rep;
}

}  // namespace varcodes
