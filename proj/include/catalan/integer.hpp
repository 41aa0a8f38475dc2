#pragma once

#include <gmpxx.h>

#include <string>

#include "catalan/errors.hpp"

namespace catalan {

// Exact arbitrary-precision integer. Everything in the library computes on
// these; no floating point anywhere.
using Integer = mpz_class;

// base^exp with a machine-word exponent.
inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Narrow an Integer to unsigned long, rejecting values that do not fit.
// `what` names the quantity in the error message.
inline unsigned long to_ulong(const Integer& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw PreconditionFailed(std::string(what) +
                             " must fit in an unsigned machine word");
  }
  return n.get_ui();
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }

inline bool is_even(const Integer& n) {
  return mpz_even_p(n.get_mpz_t()) != 0;
}
inline bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

// n > 0 and a power of two (single set bit)?
inline bool is_power_of_two(const Integer& n) {
  return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

// A candidate (x, p, y, q) for x^p - y^q = 1. All entries >= 2 once validated.
struct CatalanTuple {
  Integer x, p, y, q;

  friend bool operator==(const CatalanTuple&, const CatalanTuple&) = default;
};

}  // namespace catalan
