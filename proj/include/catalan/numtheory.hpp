#pragma once

#include <optional>
#include <utility>

#include "catalan/integer.hpp"

namespace catalan {

// p-adic valuation of n: the exact number of times the prime p divides n.
// n must be nonzero (InfiniteValuation) and p prime (InvalidPrime).
// Negative n is fine; the valuation of |n| is returned.
Integer vp(const Integer& n, const Integer& p);

// floor(n^(1/k)) for n >= 0, k >= 1.
Integer integer_nth_root(const Integer& n, const Integer& k);

// Exact binomial coefficient C(n, k) via the multiplicative recurrence.
Integer binomial(unsigned long n, unsigned long k);

struct PerfectPower {
  Integer base;      // >= 2
  Integer exponent;  // >= 2, maximal

  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

// If n = b^e for some b >= 2, e >= 2, returns (b, e) with e maximal;
// otherwise nullopt. Requires n >= 2.
std::optional<PerfectPower> is_perfect_power(const Integer& n);

// Exact primality for 0 <= n < 2^64 (deterministic Miller-Rabin witness set).
// Larger magnitudes are rejected with PreconditionFailed.
bool is_prime(const Integer& n);

// Smallest prime factor of n >= 2. The exponent positions this is used for
// are required to fit in 32 bits so trial division stays trivial.
Integer smallest_prime_factor(const Integer& n);

// Rewrite (x, p, y, q), entries >= 2, so both exponents are prime:
// a composite exponent p = k*r with r its smallest prime factor becomes
// (x^k, r). Idempotent, and x^p, y^q are preserved exactly.
CatalanTuple normalize_tuple(const CatalanTuple& t);

}  // namespace catalan
