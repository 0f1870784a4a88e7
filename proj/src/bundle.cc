// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/bundle.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <unordered_set>
#include <sstream>

#include <toml.hpp>

namespace varcodes {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void Invalid(const fs::path& file, const std::string& why) {
  throw Error(Errc::kInvalidBundle, file.string() + ": " + why);
}

toml::table ParseToml(const fs::path& path) {
  if (!fs::exists(path)) throw Error(Errc::kIo, "cannot open " + path.string());
  try {
    return toml::parse_file(path.string());
  } catch (const toml::parse_error& e) {
    throw Error(Errc::kSyntaxError, path.string() + ": " + std::string(e.description()));
  }
}

template <typename T>
T Require(const toml::node_view<const toml::node>& node, const fs::path& file,
          const std::string& key) {
  const auto v = node.value<T>();
  if (!v) Invalid(file, "missing or mistyped '" + key + "'");
  return *v;
}

std::vector<std::string> StringArray(const toml::node_view<const toml::node>& node,
                                     const fs::path& file, const std::string& key) {
  const toml::array* arr = node.as_array();
  if (!arr) Invalid(file, "missing array '" + key + "'");
  std::vector<std::string> out;
  for (const toml::node& item : *arr) {
    const auto s = item.value<std::string>();
    if (!s) Invalid(file, "'" + key + "' must hold strings");
    out.push_back(*s);
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<PriorParams> LoadPrior(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open " + path.string());
  std::vector<PriorParams> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    PriorParams p;
    int refined = 0;
    if (!(ss >> p.n >> p.k >> p.d >> refined)) Invalid(path, "bad line '" + line + "'");
    p.refined = refined != 0;
    out.push_back(p);
  }
  return out;
}

}  // namespace

IdealFile LoadIdealFile(const fs::path& path, const std::string& order_override) {
  const toml::table doc = ParseToml(path);
  const fs::path& f = path;
  const auto p = Require<int64_t>(doc["field"]["p"], f, "field.p");
  const auto m = Require<int64_t>(doc["field"]["m"], f, "field.m");
  const toml::array* mod = doc["field"]["modulus"].as_array();
  if (!mod) Invalid(f, "missing array 'field.modulus'");
  std::vector<unsigned> modulus;
  for (const toml::node& c : *mod) {
    const auto v = c.value<int64_t>();
    if (!v || *v < 0) Invalid(f, "modulus coefficients must be non-negative integers");
    modulus.push_back(static_cast<unsigned>(*v));
  }
  const FieldPtr field = FieldSpec::Make(static_cast<unsigned>(p), static_cast<unsigned>(m), modulus);

  const auto vars = StringArray(doc["ring"]["variables"], f, "ring.variables");
  const std::string order =
      order_override.empty() ? Require<std::string>(doc["ring"]["order"], f, "ring.order") : order_override;
  const RingPtr ring = std::make_shared<PolyRing>(field, vars, MonomialOrder::Parse(order, vars));

  IdealFile out;
  out.ideal.ring = ring;
  for (const std::string& g : StringArray(doc["ideal"]["generators"], f, "ideal.generators")) {
    out.ideal.generators.push_back(Polynomial::Parse(ring, g));
  }
  out.ideal.add_field_equations = doc["ideal"]["field_equations"].value_or(true);
  if (const auto pts = doc["files"]["points"].value<std::string>()) out.points = path.parent_path() / *pts;
  return out;
}

fs::path ResolveBundlePath(const std::string& name_or_path) {
  const fs::path p(name_or_path);
  if (fs::is_regular_file(p)) return p;
  if (fs::is_directory(p) && fs::is_regular_file(p / "bundle.toml")) return p / "bundle.toml";
  if (p.has_parent_path() || p.has_extension()) throw Error(Errc::kIo, "no bundle at " + name_or_path);
  const char* env = std::getenv("VARCODES_DATA_DIR");
  const fs::path root = env && *env ? fs::path(env) : fs::path(VARCODES_DATA_DIR);
  const fs::path candidate = root / name_or_path / "bundle.toml";
  if (!fs::is_regular_file(candidate)) {
    throw Error(Errc::kIo, "no bundle named '" + name_or_path + "' under " + root.string());
  }
  return candidate;
}

std::unique_ptr<InstanceBundle> InstanceBundle::Load(const fs::path& bundle_toml) {
  const toml::table doc = ParseToml(bundle_toml);
  const fs::path dir = bundle_toml.parent_path();
  const fs::path& f = bundle_toml;
  if (doc.empty()) Invalid(f, "empty bundle");
  std::unique_ptr<InstanceBundle> b(new InstanceBundle());

  b->name_ = doc["name"].value_or(std::string("unnamed"));
  IdealFile ideal = LoadIdealFile(bundle_toml);
  b->ideal_ = std::move(ideal.ideal);
  const RingPtr ring = b->ideal_.ring;

  b->gb_.emplace(Buchberger(b->ideal_));
  b->fp_.emplace(ComputeFootprint(*b->gb_));
  const Footprint& fp = *b->fp_;

  const auto files = doc["files"];
  if (!ideal.points) Invalid(f, "missing 'files.points'");
  const fs::path points = *ideal.points;
  std::vector<Point> pts = ReadPointsCsvFile(points.string(), *ring);
  if (pts.size() != fp.size()) {
    Invalid(points, std::to_string(pts.size()) + " points but the footprint has " +
                        std::to_string(fp.size()) + " monomials");
  }
  try {
    b->variety_.emplace(EnumerateVariety(b->ideal_).reordered(std::move(pts)));
  } catch (const Error& e) {
    Invalid(points, std::string("point order is not a permutation of the variety (") + e.what() + ")");
  }

  std::unordered_set<Monomial, MonomialHash> leading;
  for (const std::string& t : StringArray(files["tables"], f, "files.tables")) {
    const fs::path path = dir / t;
    CaseTable table = LoadCaseTable(path.string(), fp, path.stem().string());
    if (!leading.insert(table.leading).second) {
      Invalid(path, "second table for " + ring->format(table.leading));
    }
    b->tables_.push_back(std::move(table));
  }

  if (const auto lam = files["lambda"].value<std::string>()) {
    const fs::path path = dir / *lam;
    const toml::table ldoc = ParseToml(path);
    if (const toml::array* arr = ldoc["entry"].as_array()) {
      for (const toml::node& node : *arr) {
        const toml::node_view<const toml::node> e(node);
        LambdaEntry entry;
        entry.monomial = ring->parse_monomial(Require<std::string>(e["monomial"], path, "monomial"));
        fp.require_index(entry.monomial);
        for (const std::string& x : StringArray(e["extras"], path, "extras")) {
          entry.extras.push_back(ring->parse_monomial(x));
          fp.require_index(entry.extras.back());
        }
        std::sort(entry.extras.begin(), entry.extras.end(),
                  [&](const Monomial& a, const Monomial& c) { return ring->order().less(a, c); });
        b->lambda_.push_back(std::move(entry));
      }
    }
  }

  if (const auto ov = files["overrides"].value<std::string>()) {
    const fs::path path = dir / *ov;
    const toml::table odoc = ParseToml(path);
    if (const toml::array* arr = odoc["mu"].as_array()) {
      for (const toml::node& node : *arr) {
        const toml::node_view<const toml::node> e(node);
        MuOverride o;
        o.monomial = ring->parse_monomial(Require<std::string>(e["monomial"], path, "monomial"));
        fp.require_index(o.monomial);
        o.value = static_cast<unsigned>(Require<int64_t>(e["value"], path, "value"));
        o.note = e["note"].value_or(std::string());
        b->overrides_.push_back(std::move(o));
      }
    }
  }

  if (const auto pairs = files["pairs"].value<std::string>()) {
    b->pairs_ = LoadPairs((dir / *pairs).string());
  }
  if (const auto prior = files["prior_ctilde"].value<std::string>()) {
    b->prior_ = LoadPrior(dir / *prior);
  }
  if (const auto wit = files["witnesses"].value<std::string>()) {
    const fs::path path = dir / *wit;
    const toml::table wdoc = ParseToml(path);
    if (const toml::array* arr = wdoc["witness"].as_array()) {
      for (const toml::node& node : *arr) {
        const toml::node_view<const toml::node> e(node);
        Witness w{Require<std::string>(e["name"], path, "name"),
                  Polynomial::Parse(ring, Require<std::string>(e["polynomial"], path, "polynomial")),
                  CodeRef::Parse(Require<std::string>(e["in"], path, "in")),
                  std::nullopt};
        if (const auto n = e["not_in"].value<std::string>()) w.not_in = CodeRef::Parse(*n);
        b->witnesses_.push_back(std::move(w));
      }
    }
  }
  b->golden_ = dir / files["golden"].value_or(std::string("golden"));

  b->sigma_ = SigmaTable(fp, b->tables_);
  b->mu_ = MuTable(fp, b->tables_, b->overrides_);
  // The shipped Lambda data must be what the case tables imply.
  if (const auto lam = files["lambda"].value<std::string>()) {
    for (std::size_t i = 0; i < fp.size(); ++i) {
      std::vector<Monomial> shipped;
      for (const LambdaEntry& e : b->lambda_) {
        if (e.monomial == fp[i]) shipped = e.extras;
      }
      if (shipped != b->mu_[i].extras) {
        Invalid(dir / *lam, "extras for " + ring->format(fp[i]) + " are " +
                                FormatMonomials(*ring, shipped) + " but the case tables give " +
                                FormatMonomials(*ring, b->mu_[i].extras));
      }
    }
  }
  return b;
}

const CaseTable* InstanceBundle::table_for(const Monomial& leading) const {
  for (const CaseTable& t : tables_) {
    if (t.leading == leading) return &t;
  }
  return nullptr;
}

CodeFamilies InstanceBundle::families() const {
  return CodeFamilies(*variety_, *fp_, Values(sigma_), Values(mu_));
}

const std::vector<std::string>& ReproduceTargets() {
  static const std::vector<std::string> targets = {
      "groebner", "footprint",       "sigma-figure",  "mu-figure", "table9",
      "dual-basis-table", "ctilde-params", "css-table", "witnesses"};
  return targets;
}

std::string RenderGroebner(const GroebnerBasis& gb) {
  std::string out;
  for (const Polynomial& g : gb.polynomials()) out += g.to_string() + "\n";
  return out;
}

std::string RenderFootprint(const Footprint& fp) {
  std::string out;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    out += "M" + std::to_string(i + 1) + " " + fp.ring()->format(fp[i]) + "\n";
  }
  return out;
}

std::string RenderBoundFigure(const Footprint& fp, const std::vector<BoundEntry>& entries,
                              const std::string& title) {
  auto cell = [&](std::size_t i) {
    std::string s = std::to_string(entries[i].value);
    if (entries[i].provenance == BoundProvenance::kOverride) s += "*";
    return s;
  };
  std::string out = "# " + title + "\n";
  const PolyRing& ring = *fp.ring();
  if (ring.nvars() == 2) {
    unsigned top = 0;
    for (const Monomial& m : fp.monomials()) top = std::max(top, m[1]);
    for (unsigned j = top + 1; j-- > 0;) {
      std::vector<std::pair<unsigned, std::size_t>> row;
      for (std::size_t i = 0; i < fp.size(); ++i) {
        if (fp[i][1] == j) row.push_back({fp[i][0], i});
      }
      std::sort(row.begin(), row.end());
      std::string line;
      for (const auto& [x, i] : row) line += (line.empty() ? "" : " ") + cell(i);
      out += line + "\n";
    }
  } else {
    for (std::size_t i = 0; i < fp.size(); ++i) out += ring.format(fp[i]) + " " + cell(i) + "\n";
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].provenance == BoundProvenance::kOverride) {
      out += "* " + ring.format(fp[i]) + ": override of derived value " +
             std::to_string(entries[i].derived) + "\n";
    }
  }
  return out;
}

std::string RenderLambdaTable(const Footprint& fp, const std::vector<BoundEntry>& mu) {
  const PolyRing& ring = *fp.ring();
  std::string out;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (mu[i].extras.empty()) continue;
    out += ring.format(fp[i]) + " | " + FormatMonomials(ring, DivisorsInFootprint(fp, fp[i])) +
           " | " + FormatMonomials(ring, mu[i].extras) + "\n";
  }
  return out;
}

std::string RenderCtildeParams(const std::vector<DesignedCodeParams>& params, unsigned q) {
  std::string out;
  for (const DesignedCodeParams& p : params) {
    out += "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.delta) +
           "]_" + std::to_string(q) + "\n";
  }
  return out;
}

std::string RenderCSSTable(const std::vector<CSSParams>& rows) {
  std::string out = "l,dZ,dX,C1,C2\n";
  for (const CSSParams& p : rows) {
    out += std::to_string(p.ell) + "," + std::to_string(p.dz) + "," + std::to_string(p.dx) + "," +
           p.c1.to_string() + "," + p.c2.to_string() + "\n";
  }
  return out;
}

WitnessResult CheckWitness(const InstanceBundle& b, const Witness& w) {
  const CodeFamilies fam = b.families();
  const Vec word = Evaluate(b.variety(), w.polynomial);
  WitnessResult r;
  r.weight = HammingWeight(word);
  r.in = Build(fam, w.in).contains(word);
  if (w.not_in) r.not_in = !Build(fam, *w.not_in).contains(word);
  return r;
}

std::string RenderWitnesses(const InstanceBundle& b) {
  std::string out = "name,weight,in,not_in\n";
  for (const Witness& w : b.witnesses()) {
    const WitnessResult r = CheckWitness(b, w);
    out += w.name + "," + std::to_string(r.weight) + "," + (r.in ? "" : "!") + w.in.to_string() + ",";
    if (w.not_in) out += (r.not_in ? "" : "!") + w.not_in->to_string();
    out += "\n";
  }
  return out;
}

std::string RenderArtifact(const InstanceBundle& b, const std::string& target) {
  const unsigned q = b.ring()->f().size();
  if (target == "groebner") return RenderGroebner(b.groebner());
  if (target == "footprint") return RenderFootprint(b.footprint());
  if (target == "sigma-figure") return RenderBoundFigure(b.footprint(), b.sigma(), "sigma");
  if (target == "mu-figure") return RenderBoundFigure(b.footprint(), b.mu(), "mu");
  if (target == "table9") return RenderLambdaTable(b.footprint(), b.mu());
  if (target == "dual-basis-table") {
    std::ostringstream ss;
    WriteDualBasisCsv(ss, ComputeDualBasis(b.variety(), b.groebner(), b.footprint()));
    return ss.str();
  }
  if (target == "ctilde-params") return RenderCtildeParams(CtildeParameters(b.families()), q);
  if (target == "css-table") return RenderCSSTable(EnumerateCSSTable(b.families(), b.pairs()));
  if (target == "witnesses") return RenderWitnesses(b);
  throw Error(Errc::kIndexOutOfRange, "unknown reproduce target '" + target + "'");
}

std::string StripLicenseHeader(const std::string& golden) {
  std::size_t pos = 0;
  bool stripped = false;
  while (golden.compare(pos, 12, "# Copyright ") == 0 || golden.compare(pos, 27, "# SPDX-License-Identifier: ") == 0) {
    const auto nl = golden.find('\n', pos);
    if (nl == std::string::npos) return "";
    pos = nl + 1;
    stripped = true;
  }
  if (stripped && golden.compare(pos, 1, "\n") == 0) ++pos;
  return golden.substr(pos);
}

std::vector<DiffLine> DiffText(const std::string& expected, const std::string& actual) {
  const auto e = Lines(expected), a = Lines(actual);
  std::vector<DiffLine> out;
  for (std::size_t i = 0; i < std::max(e.size(), a.size()); ++i) {
    const std::string el = i < e.size() ? e[i] : "", al = i < a.size() ? a[i] : "";
    if (el != al || (i < e.size()) != (i < a.size())) out.push_back({i + 1, el, al});
  }
  // Byte-for-byte: a trailing-newline difference counts too.
  if (out.empty() && expected != actual) out.push_back({e.size() + 1, "", ""});
  return out;
}

ReproduceResult Reproduce(const InstanceBundle& b, const std::string& target,
                          const fs::path& out_dir) {
  ReproduceResult r;
  r.target = target;
  r.artifact = RenderArtifact(b, target);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / (target + ".txt"), std::ios::binary);
    if (!out) throw Error(Errc::kIo, "cannot write " + (out_dir / (target + ".txt")).string());
    out << r.artifact;
  }
  r.golden = b.golden_dir() / (target + ".txt");
  if (fs::exists(r.golden)) {
    r.golden_found = true;
    r.diff = DiffText(StripLicenseHeader(ReadFile(r.golden)), r.artifact);
  }
  return r;
}

void RequireReproduced(const std::vector<ReproduceResult>& results) {
  std::string msg;
  for (const ReproduceResult& r : results) {
    if (r.ok()) continue;
    msg += "\n" + r.target + ": ";
    if (!r.golden_found) {
      msg += "no golden file " + r.golden.string();
      continue;
    }
    msg += std::to_string(r.diff.size()) + " differing line(s)";
    for (const DiffLine& d : r.diff) {
      msg += "\n  line " + std::to_string(d.line) + ": expected '" + d.expected + "', got '" +
             d.actual + "'";
    }
  }
  if (!msg.empty()) throw Error(Errc::kMismatchReport, "reproduction failed" + msg);
}

}  // namespace varcodes
