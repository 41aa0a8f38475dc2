#include "catalan/numtheory.hpp"

#include <cstdint>

namespace catalan {

Integer vp(const Integer& n, const Integer& p) {
  if (n == 0) {
    throw InfiniteValuation("vp(0, p) is infinite");
  }
  // mpz_probab_prime_p is exact below 2^64 (BPSW) and the valuations we take
  // only ever use small primes; reps=32 keeps the composite check honest.
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) {
    throw InvalidPrime("vp needs a prime modulus, got " + to_string(p));
  }
  Integer stripped;
  mp_bitcnt_t count =
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Integer(static_cast<unsigned long>(count));
}

Integer integer_nth_root(const Integer& n, const Integer& k) {
  if (n < 0) {
    throw PreconditionFailed("integer_nth_root needs n >= 0");
  }
  if (k < 1) {
    throw PreconditionFailed("integer_nth_root needs k >= 1");
  }
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), to_ulong(k, "root index"));
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) {
    return 0;
  }
  if (n - k < k) {
    k = n - k;
  }
  // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step because the
  // running value is itself a binomial coefficient.
  Integer r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - i + 1;
    r /= i;
  }
  return r;
}

std::optional<PerfectPower> is_perfect_power(const Integer& n) {
  if (n < 2) {
    throw PreconditionFailed("is_perfect_power needs n >= 2");
  }
  // Largest candidate exponent: 2^e <= n, so e <= bitlength - 1. Walking
  // downward means the first exact root has the maximal exponent.
  unsigned long max_e = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
  for (unsigned long e = max_e; e >= 2; --e) {
    Integer b;
    if (mpz_root(b.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      return PerfectPower{b, Integer(e)};
    }
  }
  return std::nullopt;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      r = mulmod_u64(r, base, m);
    }
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw PreconditionFailed("is_prime domain is [0, 2^64)");
  }
  uint64_t v = mpz_get_ui(n.get_mpz_t());
  if (v < 2) {
    return false;
  }
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (v % p == 0) {
      return v == p;
    }
  }
  // Deterministic Miller-Rabin over the full 64-bit range with the first
  // twelve primes as witnesses.
  uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod_u64(a, d, v);
    if (x == 1 || x == v - 1) {
      continue;
    }
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) {
      return false;
    }
  }
  return true;
}

Integer smallest_prime_factor(const Integer& n) {
  if (n < 2) {
    throw PreconditionFailed("smallest_prime_factor needs n >= 2");
  }
  if (is_even(n)) {
    return 2;
  }
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) {
      return d;
    }
  }
  return n;
}

namespace {

// Rewrite one (base, exp) pair so exp is prime, preserving base^exp.
void normalize_power(Integer& base, Integer& exp) {
  // sizeinbase caps the exponent before ipow can blow up: the tuples this
  // handles all have word-sized exponents.
  unsigned long e = to_ulong(exp, "exponent");
  if (is_prime(exp)) {
    return;
  }
  Integer r = smallest_prime_factor(exp);
  base = ipow(base, e / to_ulong(r, "prime factor"));
  exp = r;
}

}  // namespace

CatalanTuple normalize_tuple(const CatalanTuple& t) {
  if (t.x < 2 || t.p < 2 || t.y < 2 || t.q < 2) {
    throw PreconditionFailed("tuple entries must all be >= 2");
  }
  CatalanTuple n = t;
  normalize_power(n.x, n.p);
  normalize_power(n.y, n.q);
  return n;
}

}  // namespace catalan
