#pragma once

#include <optional>

#include "latt/matrix.hpp"

namespace latt {

struct HnfResult {
  IntMat h;  // row-style Hermite normal form of the input
  IntMat u;  // unimodular, u * m = h
};

// Row-style HNF: pivots positive, entries above a pivot reduced into
// [0, pivot), pivot columns strictly increasing, zero rows trailing.
HnfResult hnf(const IntMat& m);

// HNF with zero rows dropped: canonical basis of the row span.
IntMat hnf_basis(const IntMat& m);

struct SnfResult {
  IntMat d;  // diagonal, d1 | d2 | ..., nonnegative
  IntMat u;  // unimodular
  IntMat v;  // unimodular, u * m * v = d
};

SnfResult snf(const IntMat& m);

// Basis of the full integer left kernel {x : x * m = 0}, rows in HNF.
// The kernel of an integer matrix is saturated by construction.
IntMat kernel_saturated(const IntMat& m);

struct LllResult {
  RatMat gram;  // t * input * t^t
  IntMat t;     // unimodular transform on rows
};

// Gram-matrix LLL with delta = 99/100; exact rational arithmetic.
// Throws NotPositiveDefinite.
LllResult lll_reduce(const RatMat& gram);

Int det(const IntMat& m);
Rat det(const RatMat& m);

// Inverse of a nonsingular square rational matrix.
RatMat inverse(const RatMat& m);

// Solve x * a = b over the rationals (a need not be square; least
// constraints solution not attempted: returns a solution iff the rows of b
// lie in the row space of a).
std::optional<RatMat> solve_left(const RatMat& a, const RatMat& b);

bool is_unimodular(const IntMat& m);

}  // namespace latt
