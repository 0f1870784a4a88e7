// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit status: 0 on success, 1 when a check or a
// reproduction fails, 2 on errors.

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "varcodes/bundle.h"

namespace vc = varcodes;
using nlohmann::json;

namespace {

enum class Format { kText, kCsv, kJson };

struct Globals {
  std::string bundle = "klein";
  std::string format = "text";
  unsigned jobs = 1;
  unsigned budget = vc::DefaultBudget();

  Format fmt() const {
    if (format == "csv") return Format::kCsv;
    if (format == "json") return Format::kJson;
    return Format::kText;
  }
  vc::EnumerationOptions enumeration(const std::string& strategy = "auto") const {
    vc::EnumerationOptions o;
    o.strategy = vc::ParseStrategy(strategy);
    o.budget = budget;
    o.jobs = jobs;
    return o;
  }
};

// Aligned columns for humans.
void PrintAligned(std::ostream& out, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(w[c] - r[c].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void PrintCsv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << field(r[c]);
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void PrintRows(const Globals& g, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  if (g.fmt() == Format::kJson) {
    json arr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t c = 0; c < header.size(); ++c) o[header[c]] = r[c];
      arr.push_back(o);
    }
    std::cout << arr.dump(2) << "\n";
  } else if (g.fmt() == Format::kCsv) {
    PrintCsv(std::cout, header, rows);
  } else {
    PrintAligned(std::cout, header, rows);
  }
}

std::unique_ptr<vc::InstanceBundle> OpenBundle(const Globals& g) {
  return vc::InstanceBundle::Load(vc::ResolveBundlePath(g.bundle));
}

json VecJson(const vc::Vec& v) {
  json a = json::array();
  for (vc::Elem x : v) a.push_back(x);
  return a;
}

std::string VecText(const vc::Vec& v) {
  std::string s;
  for (vc::Elem x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// --- groebner / footprint / dual-basis -------------------------------------

// An empty --ideal falls back to --bundle.
struct IdealArgs {
  std::string ideal;
  std::string order;
};

vc::IdealFile OpenIdeal(const Globals& g, const IdealArgs& a) {
  return vc::LoadIdealFile(vc::ResolveBundlePath(a.ideal.empty() ? g.bundle : a.ideal), a.order);
}

int RunGroebner(const Globals& g, const IdealArgs& a) {
  const vc::IdealFile f = OpenIdeal(g, a);
  vc::BuchbergerStats stats;
  const vc::GroebnerBasis gb = vc::Buchberger(f.ideal, &stats);
  const vc::Footprint fp = vc::ComputeFootprint(gb);
  const vc::PolyRing& ring = *f.ideal.ring;
  if (g.fmt() == Format::kJson) {
    json o;
    for (const auto& p : gb.polynomials()) o["basis"].push_back(p.to_string());
    for (const auto& m : fp.monomials()) o["footprint"].push_back(ring.format(m));
    std::cout << o.dump(2) << "\n";
  } else if (g.fmt() == Format::kCsv) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < gb.size(); ++i) {
      rows.push_back({"basis", std::to_string(i + 1), gb.polynomials()[i].to_string()});
    }
    for (std::size_t i = 0; i < fp.size(); ++i) rows.push_back({"footprint", std::to_string(i + 1), ring.format(fp[i])});
    PrintCsv(std::cout, {"kind", "index", "value"}, rows);
  } else {
    std::cout << "Groebner basis (" << gb.size() << "):\n" << vc::RenderGroebner(gb);
    std::cout << "footprint (" << fp.size() << "):\n" << vc::RenderFootprint(fp);
  }
  return 0;
}

int RunFootprint(const Globals& g, const IdealArgs& a) {
  const vc::IdealFile f = OpenIdeal(g, a);
  const vc::Footprint fp = vc::ComputeFootprint(vc::Buchberger(f.ideal));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    rows.push_back({"M" + std::to_string(i + 1), f.ideal.ring->format(fp[i])});
  }
  PrintRows(g, {"index", "monomial"}, rows);
  return 0;
}

int RunDualBasis(const Globals& g, const IdealArgs& a, const std::string& emit) {
  const vc::IdealFile f = OpenIdeal(g, a);
  const vc::GroebnerBasis gb = vc::Buchberger(f.ideal);
  const vc::Footprint fp = vc::ComputeFootprint(gb);
  const vc::Variety all = vc::EnumerateVariety(f.ideal);
  const vc::Variety v =
      f.points ? all.reordered(vc::ReadPointsCsvFile(f.points->string(), *f.ideal.ring)) : all;
  const vc::DualBasis db = vc::ComputeDualBasis(v, gb, fp);
  const bool ok = vc::CheckBiorthogonal(v, db);
  if (g.fmt() == Format::kJson) {
    json arr = json::array();
    for (std::size_t i = 0; i < db.basis.size(); ++i) {
      arr.push_back({{"i", i + 1}, {"F", db.basis[i].to_string()}, {"F_perp", db.dual[i].to_string()}});
    }
    std::cout << json{{"pairs", arr}, {"biorthogonal", ok}}.dump(2) << "\n";
  } else if (emit == "csv" || g.fmt() == Format::kCsv) {
    vc::WriteDualBasisCsv(std::cout, db);
  } else {
    vc::WriteDualBasisTable(std::cout, db);
  }
  if (!ok) std::cerr << "dual basis fails biorthogonality\n";
  return ok ? 0 : 1;
}

// --- distances ----------------------------------------------------------

void PrintDistance(const Globals& g, const vc::DistanceResult& r) {
  if (g.fmt() == Format::kJson) {
    json o{{"d", r.distance},
           {"strategy", vc::StrategyName(r.strategy)},
           {"enumerated", r.enumerated},
           {"witness", r.witness ? VecJson(*r.witness) : json(nullptr)}};
    std::cout << o.dump(2) << "\n";
  } else if (g.fmt() == Format::kCsv) {
    PrintCsv(std::cout, {"d", "strategy", "enumerated", "witness"},
             {{std::to_string(r.distance), vc::StrategyName(r.strategy), std::to_string(r.enumerated),
               r.witness ? VecText(*r.witness) : ""}});
  } else {
    std::cout << "d = " << r.distance << " (" << vc::StrategyName(r.strategy) << ", " << r.enumerated
              << " words)\n";
    if (r.witness) std::cout << "witness: " << VecText(*r.witness) << "\n";
  }
}

int RunDistance(const Globals& g, const std::string& code, const std::string& strategy) {
  const auto b = OpenBundle(g);
  const vc::LinearCode c = vc::Build(b->families(), vc::CodeRef::Parse(code));
  PrintDistance(g, vc::MinDistance(c, g.enumeration(strategy)));
  return 0;
}

int RunRelativeDistance(const Globals& g, const std::string& outer, const std::string& inner,
                        const std::string& strategy) {
  const auto b = OpenBundle(g);
  const auto fam = b->families();
  const vc::LinearCode o = vc::Build(fam, vc::CodeRef::Parse(outer));
  const vc::LinearCode i = vc::Build(fam, vc::CodeRef::Parse(inner));
  PrintDistance(g, vc::RelativeDistance(o, i, g.enumeration(strategy)));
  return 0;
}

// --- bounds -------------------------------------------------------------

int RunBounds(const Globals& g, bool sigma, bool mu, bool ctilde, bool lambda, bool prior) {
  const auto b = OpenBundle(g);
  const vc::Footprint& fp = b->footprint();
  const vc::PolyRing& ring = *b->ring();
  const unsigned q = ring.f().size();
  if (!sigma && !mu && !ctilde && !lambda && !prior) sigma = mu = true;
  auto entries = [&](const std::vector<vc::BoundEntry>& e, const std::string& title) {
    if (g.fmt() == Format::kText) {
      std::cout << vc::RenderBoundFigure(fp, e, title);
      return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < fp.size(); ++i) {
      rows.push_back({std::to_string(i + 1), ring.format(fp[i]), std::to_string(e[i].value),
                      vc::ProvenanceName(e[i].provenance), std::to_string(e[i].derived), e[i].note});
    }
    PrintRows(g, {"i", "monomial", title, "provenance", "derived", "note"}, rows);
  };
  if (sigma) entries(b->sigma(), "sigma");
  if (mu) entries(b->mu(), "mu");
  if (lambda) {
    if (g.fmt() == Format::kText) {
      std::cout << vc::RenderLambdaTable(fp, b->mu());
    } else {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < fp.size(); ++i) {
        if (b->mu()[i].extras.empty()) continue;
        rows.push_back({ring.format(fp[i]), vc::FormatMonomials(ring, vc::DivisorsInFootprint(fp, fp[i])),
                        vc::FormatMonomials(ring, b->mu()[i].extras)});
      }
      PrintRows(g, {"monomial", "divisors", "extras"}, rows);
    }
  }
  if (ctilde) {
    const auto params = vc::CtildeParameters(b->families());
    if (g.fmt() == Format::kText) {
      std::cout << vc::RenderCtildeParams(params, q);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& p : params) {
        rows.push_back({std::to_string(p.n), std::to_string(p.k), std::to_string(p.delta),
                        vc::FormatMonomials(ring, vc::ToMonomials(fp, p.l))});
      }
      PrintRows(g, {"n", "k", "d", "L"}, rows);
    }
  }
  if (prior) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : b->prior_ctilde()) {
      rows.push_back({std::to_string(p.n), std::to_string(p.k), std::to_string(p.d), p.refined ? "1" : "0"});
    }
    PrintRows(g, {"n", "k", "d", "refined"}, rows);
  }
  return 0;
}

// --- verify-tables ------------------------------------------------------

struct VerifyArgs {
  std::vector<unsigned> tables;
  std::string mode = "auto";
  std::size_t samples = 200;
  std::uint64_t seed = 20260101;
  std::size_t stride = 64;
};

int RunVerifyTables(const Globals& g, const VerifyArgs& a) {
  const auto b = OpenBundle(g);
  vc::VerifyOptions o;
  o.mode = vc::ParseVerifyMode(a.mode);
  o.samples = a.samples;
  o.seed = a.seed;
  o.jobs = g.jobs;
  o.cross_check_stride = a.stride;
  std::vector<std::size_t> which;
  if (a.tables.empty()) {
    for (std::size_t t = 0; t < b->tables().size(); ++t) which.push_back(t);
  } else {
    for (unsigned t : a.tables) {
      if (t == 0 || t > b->tables().size()) {
        throw vc::Error(vc::Errc::kIndexOutOfRange, "no table " + std::to_string(t));
      }
      which.push_back(t - 1);
    }
  }
  bool all_ok = true;
  json out = json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t t : which) {
    const vc::CaseTable& table = b->tables()[t];
    const vc::TableReport r = vc::VerifyCaseTable(table, b->groebner(), b->footprint(), o);
    all_ok = all_ok && r.ok();
    json j{{"table", r.name},
           {"leading", b->ring()->format(table.leading)},
           {"mode", vc::VerifyModeName(r.mode)},
           {"checked", r.total_checked},
           {"violations", r.total_violations},
           {"intersection_violations", r.intersection_violations},
           {"cross_checked", r.cross_checked},
           {"engine_disagreements", r.engine_disagreements},
           {"intersection_consistent", r.intersection_consistent},
           {"coverage_complete", r.coverage.complete},
           {"warnings", r.warnings},
           {"ok", r.ok()}};
    for (const auto& v : r.violations) {
      j["examples"].push_back({{"row", v.row + 1},
                               {"coefficients", VecJson(v.coefficients)},
                               {"missing", vc::FormatMonomials(*b->ring(), v.missing)}});
    }
    out.push_back(j);
    rows.push_back({r.name, b->ring()->format(table.leading), vc::VerifyModeName(r.mode),
                    std::to_string(r.total_checked), std::to_string(r.total_violations),
                    std::to_string(r.intersection_violations), r.coverage.complete ? "yes" : "no",
                    r.ok() ? "ok" : "FAIL"});
    if (g.fmt() == Format::kText) {
      for (const auto& w : r.warnings) std::cerr << r.name << ": warning: " << w << "\n";
      for (const auto& v : r.violations) {
        std::cerr << r.name << ": row " << v.row + 1 << " fails at a = (" << VecText(v.coefficients)
                  << "), missing " << vc::FormatMonomials(*b->ring(), v.missing) << "\n";
      }
    }
  }
  if (g.fmt() == Format::kJson) {
    std::cout << out.dump(2) << "\n";
  } else {
    const std::vector<std::string> header = {"table", "leading", "mode", "checked", "violations",
                                             "intersection", "covered", "result"};
    if (g.fmt() == Format::kCsv) {
      PrintCsv(std::cout, header, rows);
    } else {
      PrintAligned(std::cout, header, rows);
    }
  }
  return all_ok ? 0 : 1;
}

// --- css ----------------------------------------------------------------

std::vector<std::string> CssRow(const vc::CSSParams& p, unsigned q, bool gaps,
                                const std::optional<vc::PurityReport>& purity) {
  std::vector<std::string> r = {std::to_string(p.ell), std::to_string(p.dz), std::to_string(p.dx),
                                p.c1.to_string(), p.c2.to_string(), p.to_string(q)};
  if (gaps) {
    r.push_back(p.g1 ? std::to_string(*p.g1) : "");
    r.push_back(p.g2 ? std::to_string(*p.g2) : "");
  }
  if (purity) r.push_back(vc::PurityName(purity->verdict));
  return r;
}

std::vector<std::string> CssHeader(bool gaps, bool purity) {
  std::vector<std::string> h = {"l", "dZ", "dX", "C1", "C2", "params"};
  if (gaps) {
    h.push_back("g1");
    h.push_back("g2");
  }
  if (purity) h.push_back("purity");
  return h;
}

int RunCssEnumerate(const Globals& g, const std::string& pairs_path, const std::string& best_path,
                    bool purity) {
  const auto b = OpenBundle(g);
  const auto fam = b->families();
  const unsigned q = b->ring()->f().size();
  const std::vector<vc::CSSPair> pairs = pairs_path.empty() ? b->pairs() : vc::LoadPairs(pairs_path);
  std::optional<vc::BestKnownTable> best;
  if (!best_path.empty()) best = vc::BestKnownTable::Load(best_path);
  const auto table = vc::EnumerateCSSTable(fam, pairs, best ? &*best : nullptr);
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : table) {
    std::optional<vc::PurityReport> pr;
    if (purity) pr = vc::PurityCheck(fam, p.c1, p.c2, g.enumeration());
    rows.push_back(CssRow(p, q, best.has_value(), pr));
  }
  PrintRows(g, CssHeader(best.has_value(), purity), rows);
  return 0;
}

int RunCssParams(const Globals& g, const std::string& c1, const std::string& c2, bool purity) {
  const auto b = OpenBundle(g);
  const auto fam = b->families();
  const vc::CSSParams p = vc::ComputeCSSParams(fam, vc::CodeRef::Parse(c1), vc::CodeRef::Parse(c2));
  std::optional<vc::PurityReport> pr;
  if (purity) pr = vc::PurityCheck(fam, p.c1, p.c2, g.enumeration());
  PrintRows(g, CssHeader(false, purity), {CssRow(p, b->ring()->f().size(), false, pr)});
  if (pr && !pr->reason.empty() && g.fmt() == Format::kText) std::cout << pr->reason << "\n";
  return 0;
}

// --- reproduce ----------------------------------------------------------

int RunReproduce(const Globals& g, bool all, std::vector<std::string> targets, const std::string& out_dir) {
  const auto b = OpenBundle(g);
  if (all || targets.empty()) targets = vc::ReproduceTargets();
  std::vector<vc::ReproduceResult> results;
  for (const std::string& t : targets) results.push_back(vc::Reproduce(*b, t, out_dir));
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    rows.push_back({r.target, r.ok() ? "ok" : (r.golden_found ? "MISMATCH" : "NO GOLDEN"),
                    std::to_string(r.diff.size())});
  }
  PrintRows(g, {"target", "result", "differing_lines"}, rows);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    for (const auto& d : r.diff) {
      std::cerr << r.target << ":" << d.line << ": expected '" << d.expected << "', got '" << d.actual
                << "'\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine variety codes: Groebner bases, footprint bounds, dual bases and CSS codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--bundle", g.bundle, "Instance bundle: name under the data dir, directory or bundle.toml")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration and verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget", g.budget,
                 "Largest code dimension enumerated directly (default from VARCODES_BUDGET or 9)")
      ->check(CLI::Range(1u, 16u))
      ->capture_default_str();

  IdealArgs ideal;
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--ideal", ideal.ideal, "Bundle name or ideal TOML file (default: --bundle)");
    sub->add_option("--order", ideal.order, "Monomial order, e.g. w:2,3, lex, grlex");
  };
  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis and footprint");
  add_ideal(groebner);
  auto* footprint = app.add_subcommand("footprint", "Footprint monomials M1..Mn");
  add_ideal(footprint);
  std::string emit = "table";
  auto* dual = app.add_subcommand("dual-basis", "Dual basis F_i^perp of the footprint basis");
  add_ideal(dual);
  dual->add_option("--emit", emit, "csv or table")->check(CLI::IsMember({"csv", "table"}));

  std::string code, outer, inner, strategy = "auto";
  auto* distance = app.add_subcommand("distance", "Exact minimum distance of a named code");
  distance->add_option("--code", code, "E:5, Et:3, C:12, Ct:4, dual(...)")->required();
  distance->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "direct", "macwilliams"}));
  auto* relative = app.add_subcommand("relative-distance", "Minimum weight of outer \\ inner");
  relative->add_option("--outer", outer)->required();
  relative->add_option("--inner", inner)->required();
  relative->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "direct", "macwilliams"}));

  bool sigma = false, mu = false, ctilde = false, lambda = false, prior = false;
  auto* bounds = app.add_subcommand("bounds", "sigma and mu tables and derived parameters");
  bounds->add_flag("--sigma", sigma, "Primary bound per footprint monomial");
  bounds->add_flag("--mu", mu, "Dual bound per footprint monomial");
  bounds->add_flag("--lambda", lambda, "Lambda extras beyond the divisors");
  bounds->add_flag("--ctilde", ctilde, "Parameters of the designed dual codes");
  bounds->add_flag("--prior", prior, "Shipped comparison parameters");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-tables", "Check the coefficient case tables");
  verify->add_option("--table", va.tables, "Table number(s), 1-based; default all");
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
  verify->add_option("--samples", va.samples, "Samples per row in sample mode")->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_option("--cross-check-stride", va.stride,
                     "Recompute every n-th box with a Groebner basis (0: Groebner only)")
      ->capture_default_str();

  auto* css = app.add_subcommand("css", "Asymmetric quantum codes from nested pairs");
  css->require_subcommand(1);
  std::string pairs, best, c1, c2;
  bool purity = false;
  auto* css_enum = css->add_subcommand("enumerate", "Parameters for a pair list");
  css_enum->add_option("--pairs", pairs, "TOML pair list (default: the bundle's)");
  css_enum->add_option("--best-known", best, "CSV n,k,d of best known distances, for g1/g2");
  css_enum->add_flag("--purity", purity, "Classify purity by enumeration");
  auto* css_params = css->add_subcommand("params", "Parameters for one pair");
  css_params->add_option("--c1", c1)->required();
  css_params->add_option("--c2", c2)->required();
  css_params->add_flag("--purity", purity, "Classify purity by enumeration");

  bool all = false;
  std::vector<std::string> targets;
  std::string out_dir;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate artifacts and diff against golden files");
  reproduce->add_flag("--all", all, "Every target");
  reproduce->add_option("--target", targets)->check(CLI::IsMember(vc::ReproduceTargets()));
  reproduce->add_option("--out", out_dir, "Directory for the regenerated artifacts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*groebner) return RunGroebner(g, ideal);
    if (*footprint) return RunFootprint(g, ideal);
    if (*dual) return RunDualBasis(g, ideal, emit);
    if (*distance) return RunDistance(g, code, strategy);
    if (*relative) return RunRelativeDistance(g, outer, inner, strategy);
    if (*bounds) return RunBounds(g, sigma, mu, ctilde, lambda, prior);
    if (*verify) return RunVerifyTables(g, va);
    if (*css_enum) return RunCssEnumerate(g, pairs, best, purity);
    if (*css_params) return RunCssParams(g, c1, c2, purity);
    if (*reproduce) return RunReproduce(g, all, targets, out_dir);
  } catch (const vc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
