#pragma once

#include <utility>

#include "catalan/integer.hpp"

namespace catalan {

// A solution of alpha^2 - d*beta^2 = 1 with alpha, beta >= 1.
struct PellSolution {
  Integer alpha, beta, d;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// Fundamental (minimal beta >= 1) solution of alpha^2 - d*beta^2 = 1 for
// non-square d >= 2, found by walking the continued-fraction convergents of
// sqrt(d) with exact integer recurrences. Square d raises SquareDiscriminant.
PellSolution pell_fundamental(const Integer& d);

// (a + b*sqrt(d))^m expanded exactly in Z[sqrt(d)]: returns (A, B) with
// A + B*sqrt(d) the m-th power, via repeated squaring under
// (a,b)*(c,e) = (a*c + d*b*e, a*e + b*c). m >= 0.
std::pair<Integer, Integer> sqrt_ring_pow(const Integer& a, const Integer& b,
                                          const Integer& d, const Integer& m);

// m-th power of a Pell solution (m >= 1) under the same multiplication;
// the norm alpha^2 - d*beta^2 = 1 is preserved exactly. The input must
// itself satisfy the Pell equation.
PellSolution pell_power(const PellSolution& s, const Integer& m);

}  // namespace catalan
