#pragma once

#include <vector>

#include "catalan/integer.hpp"

namespace catalan {

// A candidate for the quartic form fa^4 + 9 fa^2 fb^2 + 27 fb^4 = fc^2.
struct QuarticTriple {
  Integer fa, fb, fc;

  friend bool operator==(const QuarticTriple&, const QuarticTriple&) = default;
};

struct EulerTriple {
  Integer al, be, ga;

  friend bool operator==(const EulerTriple&, const EulerTriple&) = default;
};

// All m in [1, bound] whose triangular number m(m+1)/2 is a perfect cube,
// ascending. Only m = 1 ever appears.
std::vector<Integer> triangular_cube_search(const Integer& bound);

// All integer solutions of al^3 + be^3 = 2 ga^3 with |al|, |be|, |ga| <= bound,
// sorted lexicographically by (al, be, ga). Every solution is trivial:
// al = be = ga, or al = -be with ga = 0.
std::vector<EulerTriple> euler_search(const Integer& bound);

// All quartic-form solutions with |fa|, |fb| <= bound and fa*fb*fc != 0,
// fc recovered as an exact square root (both signs emitted), sorted
// lexicographically. No such solution exists; the list is empty.
std::vector<QuarticTriple> form_search(const Integer& bound);

// The factorization identity driving the descent: with
// S = fa^4 + 36 fa^2 fm^2 + 432 fm^4 (the quartic form at fb = 2 fm),
// checks (S - (fa^2 + 18 fm^2)^2) / 4 == 27 fm^4 exactly.
bool xyz_identity_check(const Integer& fa, const Integer& fm);

// Which coprime factor of 27 fm^4 received the 27 when the step succeeded.
enum class DescentBranch {
  First27,   // (fc+fa^2)/2 + 9 fm^2 = 27 a^4  (blocked mod 3)
  Second27,  // (fc-fa^2)/2 - 9 fm^2 = 27 b^4
};

struct DescentOutcome {
  QuarticTriple next;  // strictly smaller solution: 1 <= next.fc < input fc
  DescentBranch branch;
};

// One infinite-descent step on a solution of the quartic form. Preconditions,
// checked in order and each raising PreconditionFailed naming the constraint:
//   fc >= 1;  fa != 0;  fb != 0;  gcd(fa, fb) = 1;  fa odd;  fb even;
//   3 does not divide fa.
// A triple passing all of those but failing the form equation raises
// NotASolution. No input satisfies everything (the form has no such
// solutions), so every real call errors; the construction is implemented
// anyway and would return a strictly smaller solution.
DescentOutcome descent_step(const QuarticTriple& t);

}  // namespace catalan
