#include "catalan/lte.hpp"

#include "catalan/numtheory.hpp"

namespace catalan {

const char* to_string(LteBranch b) {
  switch (b) {
    case LteBranch::OddPrime:
      return "OddPrime";
    case LteBranch::TwoDeep:
      return "TwoDeep";
    case LteBranch::TwoEven:
      return "TwoEven";
  }
  return "?";
}

LteResult lte_valuation(const Integer& a, const Integer& b, const Integer& n,
                        const Integer& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) {
    throw HypothesisViolated("p = " + to_string(p) + " is not prime");
  }
  if (n < 1) {
    throw HypothesisViolated("n must be >= 1");
  }
  if (a == b) {
    throw HypothesisViolated("a = b makes a^n - b^n identically 0");
  }
  if ((a * b) % p == 0) {
    throw HypothesisViolated("p divides a*b");
  }
  if ((a - b) % p != 0) {
    throw HypothesisViolated("p does not divide a - b");
  }
  if (is_odd(p)) {
    return {vp(a - b, p) + vp(n, p), LteBranch::OddPrime};
  }
  Integer v2diff = vp(a - b, 2);
  if (v2diff >= 2) {
    // a + b = 0 cannot reach here: it needs a even, excluded by 2 !| a*b.
    return {v2diff + vp(n, 2), LteBranch::TwoDeep};
  }
  if (is_even(n)) {
    if (a + b == 0) {
      throw HypothesisViolated("a + b = 0 with even n makes a^n - b^n = 0");
    }
    return {v2diff + vp(a + b, 2) + vp(n, 2) - 1, LteBranch::TwoEven};
  }
  throw HypothesisViolated(
      "p = 2 needs 4 | a - b or an even n; neither holds");
}

Integer lemma2_transfer(const Integer& a, const Integer& b, const Integer& p,
                        const Integer& q) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) {
    throw PreconditionFailed("p = " + to_string(p) + " is not prime");
  }
  if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 32) == 0) {
    throw PreconditionFailed("q = " + to_string(q) + " is not prime");
  }
  if (p == 2 && q == 2) {
    throw BothTwo("p and q cannot both be 2");
  }
  if (a == b) {
    throw PreconditionFailed("a = b is excluded");
  }
  if (gcd(a, b) != 1) {
    throw PreconditionFailed("a and b must be coprime");
  }

  unsigned long pu = to_ulong(p, "p");
  unsigned long qu = to_ulong(q, "q");
  Integer d = ipow(a, pu) - ipow(b, pu);

  // Extract c with c^q = a^p - b^p, sign-aware for odd q.
  Integer c;
  if (d >= 0) {
    c = integer_nth_root(d, q);
  } else if (is_odd(q)) {
    c = -integer_nth_root(-d, q);
  } else {
    throw NotAQthPower("a^p - b^p is negative; no even-q root");
  }
  if (ipow(c, qu) != d) {
    throw NotAQthPower("a^p - b^p = " + to_string(d) +
                       " is not an exact q-th power");
  }
  if (c % p == 0) {
    throw DivisibleByP("the root c = " + to_string(c) + " is divisible by p");
  }

  // Hypotheses all hold; the difference a - b must now be a q-th power.
  Integer diff = a - b;
  Integer t;
  if (diff >= 0) {
    t = integer_nth_root(diff, q);
  } else if (is_odd(q)) {
    t = -integer_nth_root(-diff, q);
  } else {
    throw std::logic_error("transfer conclusion failed: a - b < 0, q even");
  }
  if (ipow(t, qu) != diff) {
    throw std::logic_error("transfer conclusion failed: a - b = " +
                           to_string(diff) + " is not a q-th power");
  }
  return t;
}

}  // namespace catalan
