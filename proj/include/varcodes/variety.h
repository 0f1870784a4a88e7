// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Points of V(I_q), the evaluation map and interpolation on the variety.

#ifndef VARCODES_VARIETY_H_
#define VARCODES_VARIETY_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "varcodes/groebner.h"
#include "varcodes/linalg.h"

namespace varcodes {

using Point = std::vector<Elem>;

class Variety {
 public:
  // Points are validated against `generators` (each must vanish) and must
  // be distinct. Throws Error{kPointNotOnVariety}.
  Variety(RingPtr ring, std::vector<Point> points, std::span<const Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  // Throws Error{kPointNotOnVariety}.
  std::size_t index_of(std::span<const Elem> point) const;

  // The same point set in another order; `order` must be a permutation of
  // the current points.
  Variety reordered(std::vector<Point> order) const;

 private:
  Variety(RingPtr ring, std::vector<Point> points) : ring_(std::move(ring)), points_(std::move(points)) {}

  RingPtr ring_;
  std::vector<Point> points_;
};

// Sweeps F_q^m and keeps the common zeros of the ideal's generators (plus
// field equations, which every point of F_q^m satisfies). Points come out in
// lexicographic order of encoded coordinates.
Variety EnumerateVariety(const IdealSpec& ideal);

Vec Evaluate(const Variety& v, const Polynomial& f);
Vec EvaluateMonomial(const Variety& v, const Monomial& m);
// Rows ev(m) for each monomial.
Matrix EvaluationMatrix(const Variety& v, std::span<const Monomial> monomials);

// The reduced Lagrange polynomial of the point with index i: the normal form
// of prod_j prod_b (X_j - b)/(a_j - b). With `skip_absent`, values b that
// never occur as a j-th coordinate of a variety point are left out of the
// product; the function on V is unchanged.
Polynomial LagrangeReduced(const Variety& v, const GroebnerBasis& gb, std::size_t i,
                           bool skip_absent = true);
// Throws Error{kPointNotOnVariety}.
Polynomial LagrangeReduced(const Variety& v, const GroebnerBasis& gb,
                           std::span<const Elem> point, bool skip_absent = true);

// Caches all reduced Lagrange polynomials of a variety.
class Interpolator {
 public:
  Interpolator(const Variety& v, const GroebnerBasis& gb);

  const Polynomial& lagrange(std::size_t i) const { return lagrange_[i]; }
  // sum c_i L_i. Throws Error{kLengthMismatch}.
  Polynomial interpolate(std::span<const Elem> values) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> lagrange_;
};

Polynomial Interpolate(const Variety& v, const GroebnerBasis& gb, std::span<const Elem> values);

// CSV with a header of variable names and one point per line. Coordinates
// may be integer encodings or a-expressions. '#' starts a comment line.
std::vector<Point> ReadPointsCsv(std::istream& in, const PolyRing& ring);
std::vector<Point> ReadPointsCsvFile(const std::string& path, const PolyRing& ring);
void WritePointsCsv(std::ostream& out, const Variety& v);

}  // namespace varcodes

#endif  // VARCODES_VARIETY_H_
