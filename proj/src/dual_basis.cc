// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/dual_basis.h"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace varcodes {

DualBasis ComputeDualBasis(const Variety& v, const GroebnerBasis& gb,
                           std::span<const Polynomial> basis) {
  if (basis.size() != v.size()) {
    throw Error(Errc::kLengthMismatch, std::to_string(basis.size()) + " basis polynomials for " +
                                           std::to_string(v.size()) + " points");
  }
  const FieldSpec& f = v.ring()->f();
  DualBasis db;
  db.basis.assign(basis.begin(), basis.end());
  std::vector<Vec> rows;
  for (const Polynomial& p : basis) rows.push_back(Evaluate(v, p));
  db.b = Matrix::FromRows(v.size(), rows);
  db.b_inv = Inverse(f, db.b);
  const Interpolator interp(v, gb);
  for (std::size_t j = 0; j < v.size(); ++j) db.dual.push_back(interp.interpolate(db.b_inv.col_vec(j)));
  return db;
}

DualBasis ComputeDualBasis(const Variety& v, const GroebnerBasis& gb, const Footprint& fp) {
  std::vector<Polynomial> basis;
  for (const Monomial& m : fp.monomials()) basis.push_back(Polynomial::FromMonomial(v.ring(), m));
  return ComputeDualBasis(v, gb, basis);
}

bool CheckBiorthogonal(const Variety& v, const DualBasis& db) {
  const FieldSpec& f = v.ring()->f();
  std::vector<Vec> ev, evd;
  for (const Polynomial& p : db.basis) ev.push_back(Evaluate(v, p));
  for (const Polynomial& p : db.dual) evd.push_back(Evaluate(v, p));
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = 0; j < evd.size(); ++j) {
      if (Dot(f, ev[i], evd[j]) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

LinearCode PrimaryDescriptionOfDual(const Variety& v, const DualBasis& db, const IndexSet& l,
                                    std::string label) {
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < db.dual.size(); ++j) {
    if (!std::binary_search(l.begin(), l.end(), j)) rows.push_back(Evaluate(v, db.dual[j]));
  }
  Matrix gen = rows.empty() ? Matrix(0, v.size()) : Matrix::FromRows(v.size(), rows);
  return LinearCode(v.ring()->field(), v.size(), std::move(gen), std::move(label));
}

void WriteDualBasisCsv(std::ostream& out, const DualBasis& db) {
  out << "i,F,F_perp\n";
  for (std::size_t i = 0; i < db.basis.size(); ++i) {
    out << i + 1 << "," << db.basis[i].to_string() << "," << db.dual[i].to_string() << "\n";
  }
}

void WriteDualBasisTable(std::ostream& out, const DualBasis& db) {
  std::size_t w = 1;
  for (const Polynomial& p : db.basis) w = std::max(w, p.to_string().size());
  for (std::size_t i = 0; i < db.basis.size(); ++i) {
    out << std::setw(2) << i + 1 << "  " << std::left << std::setw(static_cast<int>(w))
        << db.basis[i].to_string() << std::right << "  " << db.dual[i].to_string() << "\n";
  }
}

}  // namespace varcodes
