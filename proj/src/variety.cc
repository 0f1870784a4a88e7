// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/variety.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace varcodes {
namespace {

std::string FormatPoint(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Variety::Variety(RingPtr ring, std::vector<Point> points, std::span<const Polynomial> generators)
    : ring_(std::move(ring)), points_(std::move(points)) {
  std::set<Point> seen;
  for (const Point& p : points_) {
    if (p.size() != ring_->nvars()) {
      throw Error(Errc::kLengthMismatch, "point " + FormatPoint(p) + " has wrong arity");
    }
    for (Elem x : p) {
      if (x >= ring_->f().size()) {
        throw Error(Errc::kPointNotOnVariety, "coordinate out of field in " + FormatPoint(p));
      }
    }
    for (const Polynomial& g : generators) {
      if (g.evaluate(p) != 0) {
        throw Error(Errc::kPointNotOnVariety,
                    FormatPoint(p) + " is not a zero of " + g.to_string());
      }
    }
    if (!seen.insert(p).second) {
      throw Error(Errc::kPointNotOnVariety, "duplicate point " + FormatPoint(p));
    }
  }
}

std::size_t Variety::index_of(std::span<const Elem> point) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (std::equal(point.begin(), point.end(), points_[i].begin(), points_[i].end())) return i;
  }
  throw Error(Errc::kPointNotOnVariety,
              FormatPoint(Point(point.begin(), point.end())) + " is not on the variety");
}

Variety Variety::reordered(std::vector<Point> order) const {
  std::vector<Point> a = points_, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw Error(Errc::kPointNotOnVariety, "point order is not a permutation of the variety");
  }
  return Variety(ring_, std::move(order));
}

Variety EnumerateVariety(const IdealSpec& ideal) {
  const RingPtr& ring = ideal.ring;
  const unsigned q = ring->f().size();
  const std::size_t nv = ring->nvars();
  std::vector<Point> points;
  Point p(nv, 0);
  for (;;) {
    bool zero = true;
    for (const Polynomial& g : ideal.generators) {
      if (g.evaluate(p) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) points.push_back(p);
    // Increment with the first coordinate most significant.
    std::size_t v = nv;
    while (v > 0 && ++p[v - 1] == q) p[--v] = 0;
    if (v == 0) break;
  }
  return Variety(ring, std::move(points), ideal.generators);
}

Vec Evaluate(const Variety& v, const Polynomial& f) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.evaluate(v[i]);
  return out;
}

Vec EvaluateMonomial(const Variety& v, const Monomial& m) {
  return Evaluate(v, Polynomial::FromMonomial(v.ring(), m));
}

Matrix EvaluationMatrix(const Variety& v, std::span<const Monomial> monomials) {
  Matrix out(monomials.size(), v.size());
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    const Vec row = EvaluateMonomial(v, monomials[r]);
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  return out;
}

Polynomial LagrangeReduced(const Variety& v, const GroebnerBasis& gb, std::size_t i,
                           bool skip_absent) {
  if (i >= v.size()) throw Error(Errc::kIndexOutOfRange, "point index " + std::to_string(i));
  const RingPtr& ring = v.ring();
  const FieldSpec& f = ring->f();
  const Point& a = v[i];
  Polynomial l = Polynomial::Constant(ring, 1);
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    std::vector<char> present(f.size(), skip_absent ? 0 : 1);
    if (skip_absent) {
      for (const Point& p : v.points()) present[p[j]] = 1;
    }
    for (Elem b = 0; b < f.size(); ++b) {
      if (b == a[j] || !present[b]) continue;
      const Elem scale = f.inv(f.sub(a[j], b));
      Polynomial factor = Polynomial::Variable(ring, j) - Polynomial::Constant(ring, b);
      l = gb.normal_form(l * factor.scale(scale));
    }
  }
  return gb.normal_form(l);
}

Polynomial LagrangeReduced(const Variety& v, const GroebnerBasis& gb,
                           std::span<const Elem> point, bool skip_absent) {
  return LagrangeReduced(v, gb, v.index_of(point), skip_absent);
}

Interpolator::Interpolator(const Variety& v, const GroebnerBasis& gb) : ring_(v.ring()) {
  lagrange_.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) lagrange_.push_back(LagrangeReduced(v, gb, i));
}

Polynomial Interpolator::interpolate(std::span<const Elem> values) const {
  if (values.size() != lagrange_.size()) {
    throw Error(Errc::kLengthMismatch, "expected " + std::to_string(lagrange_.size()) +
                                           " values, got " + std::to_string(values.size()));
  }
  Polynomial g(ring_);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) g = g + lagrange_[i].scale(values[i]);
  }
  return g;
}

Polynomial Interpolate(const Variety& v, const GroebnerBasis& gb, std::span<const Elem> values) {
  return Interpolator(v, gb).interpolate(values);
}

std::vector<Point> ReadPointsCsv(std::istream& in, const PolyRing& ring) {
  std::vector<Point> points;
  std::string line;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(Trim(cell));
    if (!header) {
      header = true;
      if (cells.size() != ring.nvars()) {
        throw Error(Errc::kSyntaxError, "point header has " + std::to_string(cells.size()) +
                                            " columns, ring has " +
                                            std::to_string(ring.nvars()) + " variables");
      }
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (cells[j] != ring.variables()[j]) {
          throw Error(Errc::kUnknownVariable, "point header column '" + cells[j] + "'");
        }
      }
      continue;
    }
    if (cells.size() != ring.nvars()) {
      throw Error(Errc::kSyntaxError, "line " + std::to_string(lineno) + ": wrong column count");
    }
    Point p;
    for (const std::string& c : cells) p.push_back(ring.f().parse(c));
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Point> ReadPointsCsvFile(const std::string& path, const PolyRing& ring) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  return ReadPointsCsv(in, ring);
}

void WritePointsCsv(std::ostream& out, const Variety& v) {
  const auto& vars = v.ring()->variables();
  for (std::size_t j = 0; j < vars.size(); ++j) out << (j ? "," : "") << vars[j];
  out << "\n";
  for (const Point& p : v.points()) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << p[j];
    out << "\n";
  }
}

}  // namespace varcodes
