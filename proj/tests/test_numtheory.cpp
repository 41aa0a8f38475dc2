#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "catalan/numtheory.hpp"

using namespace catalan;

// Brute-force oracle: largest e >= 2 with b^e = n for some b >= 2, found by
// scanning bases per exponent. Independent of the library's root machinery.
static std::optional<PerfectPower> perfect_power_oracle(const Integer& n) {
  std::optional<PerfectPower> best;
  for (unsigned long e = 2; Integer(1) << e <= n; ++e) {
    for (Integer b = 2; ipow(b, e) <= n; ++b) {
      if (ipow(b, e) == n) {
        best = PerfectPower{b, Integer(e)};  // e ascending: last hit is max
      }
    }
  }
  return best;
}

TEST_CASE("vp pinned values") {
  CHECK(vp(15561, 3) == 2);  // 15561 = 3^2 * 7 * 13 * 19
  CHECK(vp(8, 2) == 3);
  CHECK(vp(7, 5) == 0);
  CHECK(vp(-24, 2) == 3);
  CHECK(vp(1, 7) == 0);
}

TEST_CASE("vp errors") {
  CHECK_THROWS_AS(vp(0, 3), InfiniteValuation);
  CHECK_THROWS_AS(vp(10, 4), InvalidPrime);
  CHECK_THROWS_AS(vp(10, 1), InvalidPrime);
}

TEST_CASE("vp against direct division") {
  std::mt19937_64 rng(0x5eed0001);
  const Integer primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 500; ++i) {
    Integer p = primes[rng() % 6];
    Integer n = Integer(1 + rng() % 100000) * (rng() % 2 ? 1 : -1);
    Integer v = vp(n, p);
    Integer pv = ipow(p, to_ulong(v, "v"));
    CHECK(abs(n) % pv == 0);
    CHECK(abs(n) % (pv * p) != 0);
  }
}

TEST_CASE("integer_nth_root pinned values") {
  CHECK(integer_nth_root(1331, 3) == 11);
  CHECK(integer_nth_root(1330, 3) == 10);
  CHECK(integer_nth_root(26, 2) == 5);
  CHECK(integer_nth_root(0, 5) == 0);
  CHECK(integer_nth_root(1, 9) == 1);
  CHECK(integer_nth_root(Integer("1000000000000000000000000"), 1) ==
        Integer("1000000000000000000000000"));
}

TEST_CASE("integer_nth_root sandwich property") {
  std::mt19937_64 rng(0x5eed0002);
  for (int i = 0; i < 500; ++i) {
    Integer n = rng() % 1000000;
    unsigned long k = 1 + rng() % 9;
    Integer r = integer_nth_root(n, Integer(k));
    CHECK(ipow(r, k) <= n);
    CHECK(ipow(r + 1, k) > n);
  }
  CHECK_THROWS_AS(integer_nth_root(-1, 3), PreconditionFailed);
  CHECK_THROWS_AS(integer_nth_root(5, 0), PreconditionFailed);
}

TEST_CASE("binomial recurrence") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(6, 9) == 0);
  CHECK(binomial(52, 26) == Integer("495918532948104"));
  // Pascal identity on a grid.
  for (unsigned long n = 1; n <= 40; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("is_perfect_power pinned values") {
  auto r = is_perfect_power(64);
  REQUIRE(r.has_value());
  CHECK(r->base == 2);
  CHECK(r->exponent == 6);  // maximal exponent, not (8, 2)

  r = is_perfect_power(9);
  REQUIRE(r.has_value());
  CHECK(*r == PerfectPower{3, 2});

  CHECK_FALSE(is_perfect_power(12).has_value());
  CHECK_FALSE(is_perfect_power(2).has_value());

  r = is_perfect_power(Integer("10000000000000000000000"));  // 10^22
  REQUIRE(r.has_value());
  CHECK(*r == PerfectPower{10, 22});
}

TEST_CASE("is_perfect_power agrees with brute force on [2, 10^4]") {
  for (Integer n = 2; n <= 10000; ++n) {
    CAPTURE(n);
    CHECK(is_perfect_power(n) == perfect_power_oracle(n));
  }
}

TEST_CASE("is_prime pinned values") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK(is_prime(97));
  CHECK(is_prime(Integer("18446744073709551557")));   // largest prime < 2^64
  CHECK_FALSE(is_prime(Integer("18446744073709551615")));  // 2^64 - 1
  CHECK_THROWS_AS(is_prime(Integer("18446744073709551616")), PreconditionFailed);
  CHECK_THROWS_AS(is_prime(-7), PreconditionFailed);
}

TEST_CASE("is_prime against trial division below 10^4") {
  for (unsigned long n = 0; n < 10000; ++n) {
    bool composite = n < 2;
    for (unsigned long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        composite = true;
        break;
      }
    }
    CAPTURE(n);
    CHECK(is_prime(Integer(n)) == !composite);
  }
  // Strong pseudoprimes to base 2 must still be rejected.
  CHECK_FALSE(is_prime(2047));
  CHECK_FALSE(is_prime(Integer("3215031751")));
}

TEST_CASE("smallest_prime_factor") {
  CHECK(smallest_prime_factor(9) == 3);
  CHECK(smallest_prime_factor(6) == 2);
  CHECK(smallest_prime_factor(97) == 97);
  CHECK(smallest_prime_factor(391) == 17);  // 17 * 23
}

TEST_CASE("normalize_tuple pinned rewrites") {
  CHECK(normalize_tuple({2, 9, 2, 3}) == CatalanTuple{8, 3, 2, 3});
  CHECK(normalize_tuple({2, 6, 3, 5}) == CatalanTuple{8, 2, 3, 5});
  CHECK(normalize_tuple({3, 2, 2, 3}) == CatalanTuple{3, 2, 2, 3});
  CHECK(normalize_tuple({2, 4, 2, 9}) == CatalanTuple{4, 2, 8, 3});
}

TEST_CASE("normalize_tuple preserves both powers and is idempotent") {
  std::mt19937_64 rng(0x5eed0003);
  for (int i = 0; i < 300; ++i) {
    CatalanTuple t{Integer(2 + rng() % 9), Integer(2 + rng() % 11),
                   Integer(2 + rng() % 9), Integer(2 + rng() % 11)};
    CatalanTuple n = normalize_tuple(t);
    CHECK(is_prime(n.p));
    CHECK(is_prime(n.q));
    CHECK(ipow(n.x, to_ulong(n.p, "p")) == ipow(t.x, to_ulong(t.p, "p")));
    CHECK(ipow(n.y, to_ulong(n.q, "q")) == ipow(t.y, to_ulong(t.q, "q")));
    CHECK(normalize_tuple(n) == n);
  }
  CHECK_THROWS_AS(normalize_tuple({1, 2, 2, 3}), PreconditionFailed);
}
