#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalan/integer.hpp"

namespace catalan {

// The eight (overlapping) hypotheses under which the equation is resolved.
// A normalized tuple can satisfy several, or none at all — the toolkit covers
// special instances, not the full equation.
enum class CaseId {
  I,     // q = 2
  II,    // p = 2
  III,   // x is a power of 2
  IV,    // x odd and 8 does not divide x - 1
  V,     // x divides q
  VI,    // y divides x - 1
  VII,   // y is a prime power
  VIII,  // y <= 4^p or x <= 4^q
};

enum class Verdict {
  Excluded,         // a cheap obstruction proves x^p - y^q != 1
  CatalanSolution,  // the tuple is (3, 2, 2, 3)
  DirectCheck,      // x^p - y^q != 1 verified by exact evaluation
};

// What kind of evidence the certificate carries.
enum class Obstruction {
  Mod4,             // case I, x even: x^p and y^q + 1 disagree mod 4
  Mod8,             // case IV: x^p - 1 = x - 1 != 0 and y^q = 0 mod 8
  OddCofactor,      // case III, q odd: (y^q+1)/(y+1) is odd >= 3, x^p = 2^k
  InequalityChain,  // case V bound 3^(p-1)-1; case VIII records 4^p / 4^q
  GcdValuation,     // cases VI / VII: cofactor gcd / ell-adic valuations
  Direct,           // exact evaluation of both sides
};

const char* to_string(CaseId c);
const char* to_string(Verdict v);
const char* to_string(Obstruction o);
std::optional<CaseId> case_id_from_string(const std::string& s);

// Self-contained, re-checkable record of one rule application. Witness
// entries are pure functions of the tuple, stored in a fixed order.
struct Certificate {
  CaseId case_id;
  CatalanTuple tuple;
  Verdict verdict;
  Obstruction obstruction;
  std::vector<std::pair<std::string, Integer>> witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// The set of cases whose hypothesis t satisfies, ascending. t must be
// normalized (prime exponents), else NotNormalized; entries < 2 raise
// PreconditionFailed.
std::vector<CaseId> classify(const CatalanTuple& t);

// Apply case c's rule to t. c must be in classify(t), else
// HypothesisNotSatisfied. The verdict is CatalanSolution exactly for
// (3, 2, 2, 3); otherwise a cheap obstruction (Excluded) when the case's side
// conditions hold, or DirectCheck with the exact lhs/rhs evaluation.
// Witness layout per case (beyond the cheap obstructions, VI/VII/VIII attach
// their structural values to the DirectCheck certificate):
//   I   Excluded/Mod4:            lhs_mod4, rhs_mod4      (x even)
//   III Excluded/OddCofactor:     s                       (q odd)
//   IV  Excluded/Mod8:            x_mod8, lhs_mod8, rhs_mod8
//                                 (p, q odd and y even)
//   V   Excluded/InequalityChain: y_lower_bound = 3^(p-1) - 1  (q odd,
//                                 y below the bound)
//   VI  DirectCheck/GcdValuation: z = (x-1)/y, gcd1 = gcd(z, (x^p-1)/(x-1))
//   VII DirectCheck/GcdValuation: ell, a = v_ell(x-1),
//                                 b = v_ell((x^p-1)/(x-1))
//   VIII DirectCheck/InequalityChain: y_bound = 4^p, x_bound = 4^q
// plus lhs = x^p, rhs = y^q on every DirectCheck / CatalanSolution
// certificate (CatalanSolution pairs with obstruction Direct).
Certificate apply_rule(CaseId c, const CatalanTuple& t);

// Recompute the certificate from its tuple and compare bit-exactly; also
// re-checks the verdict semantics by direct evaluation. True iff identical
// and sound.
bool verify_certificate(const Certificate& cert);

// Exhaustive sweep: all normalized tuples with 2 <= x <= x_max, prime
// p, q <= exp_max, x^p <= power_cap and x^p - y^q = 1 for some y >= 2,
// sorted by (x, p, y, q). Bounds must be >= 2. `workers` >= 1 splits the
// x-range into contiguous blocks searched concurrently; results are merged
// in deterministic order regardless of scheduling.
std::vector<CatalanTuple> search(const Integer& x_max, const Integer& exp_max,
                                 const Integer& power_cap, int workers = 1);

// The y-free cheap rule (if any) that eliminates the whole family
// (x, p, *, q) before any root extraction, first match in case order:
//   I:   q = 2 and x even           III: x power of two and q odd
//   IV:  x odd, 8 not | x-1, p and q odd (any candidate y is even by parity)
//   V:   x = q odd and x^p - 1 < (3^(p-1) - 1)^q
std::optional<CaseId> prune_family(const Integer& x, const Integer& p,
                                   const Integer& q);

struct PrunedSearchResult {
  std::vector<CatalanTuple> solutions;
  std::map<CaseId, Integer> stats;  // families eliminated per rule; all 8 keys
};

// Same sweep as search() but families are dropped via prune_family before
// direct evaluation. Solutions are identical to search() on equal bounds.
PrunedSearchResult search_pruned(const Integer& x_max, const Integer& exp_max,
                                 const Integer& power_cap, int workers = 1);

// The finishing move for the two live exponents once everything else is
// excluded: for p = 3 the divisor 4^3 - 2^3 = 56 forces q = 7, for p = 5 the
// divisor 6^5 - 2^5 = 7744 forces q = 11, and in both cases the exact
// inequality (p^(q-1) + 1)^p < ((p+1)^p - 1)^q closes the case. Keys:
// divisor, q, inequality_holds (1 = strict inequality verified exactly).
// Note: the k = p*t + 1 <= 4 bookkeeping only admits p = 3 (t = 1 gives
// k = 4); the p = 5 check is implemented and verified exactly as well.
// Other p raise OutOfScope.
std::vector<std::pair<std::string, Integer>> case_viii_endgame_check(
    const Integer& p);

// Exact verification that 1 + p^(q-1) (2q-1)^q > (2q sqrt(p))^q for distinct
// odd primes p, q, by comparing LHS^2 against (4 q^2 p)^q in integers, plus
// the companion inequality 2^q < p^(q-1). PreconditionFailed unless p, q are
// distinct odd primes.
bool cassels_bound_check(const Integer& p, const Integer& q);

}  // namespace catalan
