#pragma once

#include "catalan/integer.hpp"

namespace catalan {

// Exact Gaussian integer re + im*i.
struct GaussianInt {
  Integer re, im;

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

inline GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }
inline Integer norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

// z^n by repeated squaring, n >= 0.
GaussianInt gaussian_pow(const GaussianInt& z, const Integer& n);

// The unique associate u*z (u a unit) with re > 0 and im >= 0; units map to 1.
GaussianInt canonical_associate(const GaussianInt& z);

// Euclidean gcd, returned as the canonical associate. gcd(z, 0) = assoc(z);
// both arguments zero raise BothZero.
GaussianInt gaussian_gcd(const GaussianInt& z1, const GaussianInt& z2);

// The imaginary part of (a + b*i)^p for odd prime p, as the closed binomial
// sum  b * sum_{j=0}^{(p-1)/2} C(p,2j) a^(2j) b^(p-2j-1) (-1)^((p-1)/2 - j).
// Even or composite p raises InvalidExponent.
Integer imag_part_formula(const Integer& p, const Integer& a, const Integer& b);

struct ValuationPair {
  Integer v_lhs, v_rhs;
  bool strict;  // v_lhs > v_rhs

  friend bool operator==(const ValuationPair&, const ValuationPair&) = default;
};

// The 2-adic obstruction behind the "x odd square, q even" exclusion:
// compares v2 of  L = sum_{j=2}^{(p-1)/2} C(p,2j) (-a^2)^j  against
// v2 of  R = a^2 * C(p,2),  for prime p >= 5 and even a != 0.
// p = 3 leaves no terms (EmptySum); L = 0 would have infinite valuation
// (InfiniteValuation; never observed).
ValuationPair qeven4_valuation_check(const Integer& p, const Integer& a);

}  // namespace catalan
