#pragma once

#include "catalan/integer.hpp"

namespace catalan {

// Which branch of the valuation lemma produced the value.
enum class LteBranch {
  OddPrime,  // p >= 3:                 vp(a^n - b^n) = vp(a-b) + vp(n)
  TwoDeep,   // p = 2, v2(a-b) >= 2:    v2(a^n - b^n) = v2(a-b) + v2(n)
  TwoEven,   // p = 2, n even:          v2(a^n - b^n) = v2(a-b) + v2(a+b) + v2(n) - 1
};

const char* to_string(LteBranch b);

struct LteResult {
  Integer value;
  LteBranch branch;

  friend bool operator==(const LteResult&, const LteResult&) = default;
};

// vp(a^n - b^n) computed from the closed form, without expanding the powers.
// Hypotheses (each failure raises HypothesisViolated naming the culprit):
//   a != b; p prime; n >= 1; p does not divide a*b; p divides a - b;
//   for p = 2 additionally v2(a-b) >= 2 or n even,
//   and a + b != 0 when the even branch is taken (a^n = b^n otherwise).
// Negative a, b are accepted; the formulas hold verbatim.
LteResult lte_valuation(const Integer& a, const Integer& b, const Integer& n,
                        const Integer& p);

// If a^p - b^p is an exact q-th power c^q with p not dividing c (p, q prime,
// not both 2; a != b coprime), then a - b is itself a q-th power; returns t
// with t^q = a - b. For even q the non-negative root is returned.
// Errors: BothTwo, NotAQthPower, DivisibleByP; PreconditionFailed for the
// structural requirements on a, b, p, q.
Integer lemma2_transfer(const Integer& a, const Integer& b, const Integer& p,
                        const Integer& q);

}  // namespace catalan
