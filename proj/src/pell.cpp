#include "catalan/pell.hpp"

#include "catalan/numtheory.hpp"

namespace catalan {

PellSolution pell_fundamental(const Integer& d) {
  if (d < 2) {
    throw PreconditionFailed("pell_fundamental needs d >= 2");
  }
  Integer a0 = integer_nth_root(d, 2);
  if (a0 * a0 == d) {
    throw SquareDiscriminant("d = " + to_string(d) + " is a perfect square");
  }

  // Continued fraction of sqrt(d): state (P, Q), partial quotient
  // a = floor((a0 + P) / Q), advanced by P' = a*Q - P, Q' = (d - P'^2) / Q
  // (always exact). Convergents h/k via the standard two-term recurrence.
  // The first convergent with h^2 - d k^2 = 1 is the fundamental solution —
  // checking the norm directly sidesteps any period-parity bookkeeping.
  Integer P = 0, Q = 1, a = a0;
  Integer h_prev = 1, h = a0;
  Integer k_prev = 0, k = 1;
  while (h * h - d * k * k != 1) {
    P = a * Q - P;
    Q = (d - P * P) / Q;
    a = (a0 + P) / Q;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {h, k, d};
}

std::pair<Integer, Integer> sqrt_ring_pow(const Integer& a, const Integer& b,
                                          const Integer& d, const Integer& m) {
  if (m < 0) {
    throw PreconditionFailed("sqrt_ring_pow needs m >= 0");
  }
  Integer ra = 1, rb = 0;  // running result
  Integer xa = a, xb = b;  // running square
  Integer e = m;
  while (e > 0) {
    if (is_odd(e)) {
      Integer na = ra * xa + d * rb * xb;
      Integer nb = ra * xb + rb * xa;
      ra = na;
      rb = nb;
    }
    Integer sa = xa * xa + d * xb * xb;
    Integer sb = 2 * xa * xb;
    xa = sa;
    xb = sb;
    e >>= 1;
  }
  return {ra, rb};
}

PellSolution pell_power(const PellSolution& s, const Integer& m) {
  if (m < 1) {
    throw PreconditionFailed("pell_power needs m >= 1");
  }
  if (s.alpha * s.alpha - s.d * s.beta * s.beta != 1) {
    throw PreconditionFailed("input does not satisfy alpha^2 - d beta^2 = 1");
  }
  auto [a, b] = sqrt_ring_pow(s.alpha, s.beta, s.d, m);
  return {a, b, s.d};
}

}  // namespace catalan
