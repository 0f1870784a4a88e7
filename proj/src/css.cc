// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/css.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <regex>
#include <sstream>

#include <toml.hpp>

namespace varcodes {

CodeRef CodeRef::Parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  CodeRef ref;
  while (s.rfind("dual(", 0) == 0 && s.back() == ')') {
    ref.dual = !ref.dual;
    s = s.substr(5, s.size() - 6);
  }
  if (s == "zero" || s == "{0}") {
    ref.family = Family::kZero;
    return ref;
  }
  if (s == "full") {
    ref.family = Family::kFull;
    return ref;
  }
  static const std::regex re(R"(^(Et|Ct|E|C)(?::([0-9]+)|\(([0-9]+)\))$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) {
    throw Error(Errc::kSyntaxError, "unknown code reference '" + std::string(text) + "'");
  }
  const std::string fam = m[1];
  ref.family = fam == "E" ? Family::kE : fam == "Et" ? Family::kEt : fam == "C" ? Family::kC : Family::kCt;
  ref.param = static_cast<unsigned>(std::stoul(m[2].matched ? m[2].str() : m[3].str()));
  return ref;
}

std::string CodeRef::to_string() const {
  std::string s;
  switch (family) {
    case Family::kE: s = "E(" + std::to_string(param) + ")"; break;
    case Family::kEt: s = "Et(" + std::to_string(param) + ")"; break;
    case Family::kC: s = "C(" + std::to_string(param) + ")"; break;
    case Family::kCt: s = "Ct(" + std::to_string(param) + ")"; break;
    case Family::kZero: s = "{0}"; break;
    case Family::kFull: s = "full"; break;
  }
  return dual ? "dual(" + s + ")" : s;
}

VarietyCodeSpec Resolve(const CodeFamilies& fam, const CodeRef& ref) {
  using F = CodeRef::Family;
  VarietyCodeSpec spec;
  switch (ref.family) {
    case F::kE: spec = {true, fam.first(ref.param)}; break;
    case F::kEt: spec = {true, fam.sigma_at_least(ref.param)}; break;
    case F::kC: spec = {false, fam.first(ref.param)}; break;
    case F::kCt: spec = {false, fam.mu_below(ref.param)}; break;
    case F::kZero: spec = {true, {}}; break;
    case F::kFull: spec = {false, {}}; break;
  }
  if (ref.dual) spec.primary = !spec.primary;
  return spec;
}

LinearCode Build(const CodeFamilies& fam, const CodeRef& ref) {
  const VarietyCodeSpec spec = Resolve(fam, ref);
  return spec.primary ? fam.primary(spec.l, ref.to_string()) : fam.dual(spec.l, ref.to_string());
}

std::string PurityName(Purity p) {
  switch (p) {
    case Purity::kUnknown: return "unknown";
    case Purity::kPure: return "pure";
    case Purity::kImpure: return "impure";
  }
  return "?";
}

std::string CSSParams::to_string(unsigned q) const {
  return "[[" + std::to_string(n) + "," + std::to_string(ell) + "," + std::to_string(dz) + "/" +
         std::to_string(dx) + "]]_" + std::to_string(q);
}

namespace {

// The zero code and the full space have both a primary and a dual
// description; bring `spec` to the requested kind when possible.
bool Recast(VarietyCodeSpec& spec, bool primary, std::size_t n) {
  if (spec.primary == primary) return true;
  if (spec.l.empty() || spec.l.size() == n) {
    IndexSet flipped;
    if (spec.l.empty()) {
      for (std::size_t i = 0; i < n; ++i) flipped.push_back(i);
    }
    spec = {primary, std::move(flipped)};
    return true;
  }
  return false;
}

}  // namespace

CSSParams ComputeCSSParams(const CodeFamilies& fam, const CodeRef& c1, const CodeRef& c2) {
  const std::size_t n = fam.length();
  VarietyCodeSpec s1 = Resolve(fam, c1), s2 = Resolve(fam, c2);
  if (!Recast(s2, s1.primary, n) && !Recast(s1, s2.primary, n)) {
    throw Error(Errc::kUnsupported, "no footprint bound for the mixed pair " + c1.to_string() +
                                        " / " + c2.to_string());
  }
  CSSParams p;
  p.n = n;
  p.c1 = c1;
  p.c2 = c2;
  unsigned dz = 0, dx = 0;
  if (s1.primary) {
    // C2 = C(L2) inside C1 = C(L1).
    if (!(s2.l.size() < s1.l.size() &&
          std::includes(s1.l.begin(), s1.l.end(), s2.l.begin(), s2.l.end()))) {
      throw Error(Errc::kNotNested, c2.to_string() + " is not strictly inside " + c1.to_string());
    }
    p.ell = s1.l.size() - s2.l.size();
    dz = PrimaryRelativeBound(fam.sigma(), s1.l, s2.l);
    dx = DualRelativeBound(fam.mu(), s1.l, s2.l);
  } else {
    // C1 = C^perp(L1), C2 = C^perp(L2) with L1 strictly inside L2.
    if (!(s1.l.size() < s2.l.size() &&
          std::includes(s2.l.begin(), s2.l.end(), s1.l.begin(), s1.l.end()))) {
      throw Error(Errc::kNotNested, c2.to_string() + " is not strictly inside " + c1.to_string());
    }
    p.ell = s2.l.size() - s1.l.size();
    dz = DualRelativeBound(fam.mu(), s2.l, s1.l);
    dx = PrimaryRelativeBound(fam.sigma(), s2.l, s1.l);
  }
  p.swapped = dz < dx;
  p.dz = std::max(dz, dx);
  p.dx = std::min(dz, dx);
  return p;
}

PurityReport PurityCheck(const CodeFamilies& fam, const CodeRef& c1, const CodeRef& c2,
                         const EnumerationOptions& opts) {
  PurityReport rep;
  const CSSParams p = ComputeCSSParams(fam, c1, c2);
  const unsigned z_bound = p.swapped ? p.dx : p.dz;
  const unsigned x_bound = p.swapped ? p.dz : p.dx;
  const LinearCode code1 = Build(fam, c1), code2 = Build(fam, c2);
  const LinearCode perp2 = DualCode(code2, "dual(" + c2.to_string() + ")");
  const LinearCode perp1 = DualCode(code1, "dual(" + c1.to_string() + ")");

  // One side: outer \ inner against outer alone.
  auto side = [&](const LinearCode& outer, const LinearCode& inner, unsigned bound,
                  std::optional<std::size_t>& d_abs, std::optional<std::size_t>& d_rel,
                  const std::string& name) -> Purity {
    if (inner.dimension() == 0) return Purity::kPure;
    try {
      d_abs = MinDistance(outer, opts).distance;
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      rep.reason += name + ": absolute distance over budget; ";
      return Purity::kUnknown;
    }
    if (*d_abs < bound) {
      rep.reason += name + ": d = " + std::to_string(*d_abs) + " below the relative bound " +
                    std::to_string(bound) + "; ";
      return Purity::kImpure;
    }
    try {
      d_rel = RelativeDistance(outer, inner, opts).distance;
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      rep.reason += name + ": relative distance over budget; ";
      return Purity::kUnknown;
    }
    if (*d_rel != *d_abs) {
      rep.reason += name + ": relative " + std::to_string(*d_rel) + " vs absolute " +
                    std::to_string(*d_abs) + "; ";
      return Purity::kImpure;
    }
    return Purity::kPure;
  };
  const Purity z = side(code1, code2, z_bound, rep.d_c1, rep.d_c1_c2, "Z side");
  const Purity x = side(perp2, perp1, x_bound, rep.d_c2perp, rep.d_c2perp_c1perp, "X side");
  if (rep.reason.size() >= 2) rep.reason.resize(rep.reason.size() - 2);
  if (z == Purity::kImpure || x == Purity::kImpure) {
    rep.verdict = Purity::kImpure;
  } else if (z == Purity::kPure && x == Purity::kPure) {
    rep.verdict = Purity::kPure;
  }
  return rep;
}

std::vector<CSSPair> LoadPairs(const std::string& path) {
  toml::table doc;
  try {
    doc = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    throw Error(Errc::kSyntaxError, path + ": " + std::string(e.description()));
  }
  std::vector<CSSPair> out;
  const toml::array* arr = doc["pair"].as_array();
  if (!arr) return out;
  for (const toml::node& node : *arr) {
    const toml::table* t = node.as_table();
    if (!t) throw Error(Errc::kSyntaxError, path + ": [[pair]] entries must be tables");
    const auto c1 = (*t)["c1"].value<std::string>();
    const auto c2 = (*t)["c2"].value<std::string>();
    if (!c1 || !c2) throw Error(Errc::kSyntaxError, path + ": pair needs c1 and c2");
    out.push_back({CodeRef::Parse(*c1), CodeRef::Parse(*c2)});
  }
  return out;
}

BestKnownTable BestKnownTable::Parse(std::istream& in) {
  BestKnownTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::size_t n, k;
    unsigned d;
    if (!(ss >> n >> k >> d)) {
      throw Error(Errc::kSyntaxError, "best-known line " + std::to_string(lineno));
    }
    t.table_[{n, k}] = d;
  }
  // Non-increasing in k for each n.
  for (auto it = t.table_.begin(); it != t.table_.end(); ++it) {
    auto next = std::next(it);
    if (next != t.table_.end() && next->first.first == it->first.first && next->second > it->second) {
      throw Error(Errc::kInvalidBundle, "best-known distances increase with k at n = " +
                                            std::to_string(it->first.first));
    }
  }
  return t;
}

BestKnownTable BestKnownTable::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  return Parse(in);
}

std::optional<unsigned> BestKnownTable::best(std::size_t n, std::size_t k) const {
  auto it = table_.find({n, k});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BestKnownTable::largest_dimension(std::size_t n, unsigned d) const {
  std::optional<std::size_t> out;
  for (const auto& [key, dist] : table_) {
    if (key.first == n && dist >= d) out = key.second;
  }
  return out;
}

void FillGaps(CSSParams& p, const BestKnownTable& best) {
  auto delta = [&](unsigned other_side) -> std::optional<unsigned> {
    const auto k1 = best.largest_dimension(p.n, other_side);
    if (!k1 || *k1 < p.ell) return std::nullopt;
    return best.best(p.n, p.n - (*k1 - p.ell));
  };
  if (const auto dz = delta(p.dx)) p.g1 = static_cast<int>(*dz) - static_cast<int>(p.dz);
  if (const auto dx = delta(p.dz)) p.g2 = static_cast<int>(*dx) - static_cast<int>(p.dx);
}

std::vector<CSSParams> EnumerateCSSTable(const CodeFamilies& fam, const std::vector<CSSPair>& pairs,
                                         const BestKnownTable* best) {
  std::vector<CSSParams> out;
  for (const CSSPair& pair : pairs) {
    CSSParams p = ComputeCSSParams(fam, pair.c1, pair.c2);
    if (best) FillGaps(p, *best);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace varcodes
