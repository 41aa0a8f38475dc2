#include "catalan/gaussian.hpp"

#include "catalan/numtheory.hpp"

namespace catalan {

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt gaussian_pow(const GaussianInt& z, const Integer& n) {
  if (n < 0) {
    throw PreconditionFailed("gaussian_pow needs n >= 0");
  }
  GaussianInt result{1, 0};
  GaussianInt base = z;
  Integer e = n;
  while (e > 0) {
    if (is_odd(e)) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

GaussianInt canonical_associate(const GaussianInt& z) {
  if (z == GaussianInt{0, 0}) {
    return z;
  }
  // Exactly one of the four associates lands in {re > 0, im >= 0}.
  GaussianInt w = z;
  const GaussianInt i{0, 1};
  for (int k = 0; k < 4; ++k) {
    if (w.re > 0 && w.im >= 0) {
      return w;
    }
    w = w * i;
  }
  throw std::logic_error("no associate in the canonical quadrant");
}

namespace {

// Round t / n to the nearest integer (ties toward +infinity), exact.
Integer nearest_quotient(const Integer& t, const Integer& n) {
  Integer q;
  Integer num = 2 * t + n;
  Integer den = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

GaussianInt gaussian_gcd(const GaussianInt& z1, const GaussianInt& z2) {
  if (z1 == GaussianInt{0, 0} && z2 == GaussianInt{0, 0}) {
    throw BothZero("gcd(0, 0) is undefined");
  }
  GaussianInt a = z1, b = z2;
  while (!(b == GaussianInt{0, 0})) {
    // Nearest-integer division keeps norm(r) <= norm(b)/2, so this
    // terminates like the rational Euclid.
    GaussianInt num = a * conj(b);
    Integer n = norm(b);
    GaussianInt q{nearest_quotient(num.re, n), nearest_quotient(num.im, n)};
    GaussianInt r = a - q * b;
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

Integer imag_part_formula(const Integer& p, const Integer& a,
                          const Integer& b) {
  if (p < 3 || is_even(p) || !is_prime(p)) {
    throw InvalidExponent("p = " + to_string(p) + " is not an odd prime");
  }
  unsigned long pu = to_ulong(p, "p");
  unsigned long half = (pu - 1) / 2;
  Integer sum = 0;
  for (unsigned long j = 0; j <= half; ++j) {
    Integer term = binomial(pu, 2 * j) * ipow(a, 2 * j) * ipow(b, pu - 2 * j - 1);
    if ((half - j) % 2 != 0) {
      term = -term;
    }
    sum += term;
  }
  return b * sum;
}

ValuationPair qeven4_valuation_check(const Integer& p, const Integer& a) {
  if (p < 3 || is_even(p) || !is_prime(p)) {
    throw InvalidExponent("p = " + to_string(p) + " is not an odd prime");
  }
  if (p == 3) {
    throw EmptySum("p = 3 leaves no tail terms (j starts at 2)");
  }
  if (a == 0 || is_odd(a)) {
    throw PreconditionFailed("a must be a nonzero even integer");
  }
  unsigned long pu = to_ulong(p, "p");
  unsigned long half = (pu - 1) / 2;
  Integer neg_a2 = -(a * a);
  Integer lhs = 0;
  for (unsigned long j = 2; j <= half; ++j) {
    lhs += binomial(pu, 2 * j) * ipow(neg_a2, j);
  }
  if (lhs == 0) {
    throw InfiniteValuation("tail sum vanished");
  }
  Integer rhs = a * a * binomial(pu, 2);
  Integer v_lhs = vp(lhs, 2);
  Integer v_rhs = vp(rhs, 2);
  return {v_lhs, v_rhs, v_lhs > v_rhs};
}

}  // namespace catalan
