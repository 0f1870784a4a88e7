// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures, random generators and brute-force oracles for the tests.
// The oracles deliberately avoid the library's fast paths: plain nested
// loops over messages, points and field elements.

#ifndef VARCODES_TESTS_SUPPORT_H_
#define VARCODES_TESTS_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "varcodes/bundle.h"

namespace varcodes::testing {

// The shipped Klein bundle, loaded once per process.
const InstanceBundle& Klein();

using Rng = std::mt19937_64;

Elem RandomElem(const FieldSpec& f, Rng& rng);
Elem RandomNonzero(const FieldSpec& f, Rng& rng);
Vec RandomVec(const FieldSpec& f, std::size_t n, Rng& rng);
// Each footprint monomial present with probability `density`, random
// nonzero coefficient. May be zero.
Polynomial RandomFootprintPoly(const Footprint& fp, Rng& rng, double density = 0.3);
// Nonzero, with leading monomial fp[lead] and random lower terms.
Polynomial RandomWithLeading(const Footprint& fp, std::size_t lead, Rng& rng);
// Random polynomial with exponents up to max_exp, not reduced.
Polynomial RandomDensePoly(const RingPtr& ring, unsigned max_exp, std::size_t terms, Rng& rng);
Monomial RandomMonomial(std::size_t nvars, unsigned max_exp, Rng& rng);

// Product in GF(2^m) by shift-and-add modulo the given modulus bits
// (c_m..c_0 as in the bundle), independent of the log tables.
Elem ShiftAddMul(Elem x, Elem y, const std::vector<unsigned>& modulus);

// Common zeros of `generators` found by sweeping F_q^2 point by point.
std::vector<Point> BruteForceZeros(const FieldSpec& f, const std::vector<Polynomial>& generators);

// Minimum weight over all nonzero messages, counted by odometer over
// q^k messages. Only for small k.
std::size_t NaiveMinDistance(const FieldSpec& f, const Matrix& g);
// Minimum weight of sum a_i g_i over messages with a nonzero coefficient
// on some row of `extra` (rows of `inner` span the subcode).
std::size_t NaiveRelativeDistance(const FieldSpec& f, const Matrix& inner, const Matrix& extra);
std::vector<std::uint64_t> NaiveWeightDistribution(const FieldSpec& f, const Matrix& g);

// A random k x n matrix of rank k.
Matrix RandomFullRank(const FieldSpec& f, std::size_t k, std::size_t n, Rng& rng);

// Fresh temporary directory, removed by the caller if desired.
std::string MakeTempDir(const std::string& stem);

}  // namespace varcodes::testing

#endif  // VARCODES_TESTS_SUPPORT_H_
