#include "catalan/descent.hpp"

#include <optional>

#include "catalan/numtheory.hpp"

namespace catalan {

std::vector<Integer> triangular_cube_search(const Integer& bound) {
  if (bound < 0) {
    throw PreconditionFailed("triangular_cube_search needs bound >= 0");
  }
  std::vector<Integer> hits;
  // T ascends by m each step; track r = floor(cbrt(T)) incrementally so the
  // scan does O(1) big-int work per m instead of a root extraction.
  Integer t = 0, r = 0, next_cube = 1;  // next_cube = (r+1)^3
  for (Integer m = 1; m <= bound; ++m) {
    t += m;  // t = m(m+1)/2
    while (next_cube <= t) {
      ++r;
      next_cube = (r + 1) * (r + 1) * (r + 1);
    }
    if (r * r * r == t) {
      hits.push_back(m);
    }
  }
  return hits;
}

namespace {

// Sign-aware exact cube root: returns r with r^3 = n, or nullopt.
std::optional<Integer> exact_cbrt(const Integer& n) {
  Integer r = integer_nth_root(abs(n), 3);
  if (n < 0) {
    r = -r;
  }
  if (r * r * r == n) {
    return r;
  }
  return std::nullopt;
}

}  // namespace

std::vector<EulerTriple> euler_search(const Integer& bound) {
  if (bound < 1) {
    throw PreconditionFailed("euler_search needs bound >= 1");
  }
  std::vector<EulerTriple> sols;
  // ga is determined by (al, be), so scanning al, be ascending already
  // yields lexicographic order.
  for (Integer al = -bound; al <= bound; ++al) {
    for (Integer be = -bound; be <= bound; ++be) {
      Integer s = al * al * al + be * be * be;
      if (is_odd(s)) {
        continue;
      }
      auto ga = exact_cbrt(s / 2);
      if (ga && abs(*ga) <= bound) {
        sols.push_back({al, be, *ga});
      }
    }
  }
  return sols;
}

std::vector<QuarticTriple> form_search(const Integer& bound) {
  if (bound < 1) {
    throw PreconditionFailed("form_search needs bound >= 1");
  }
  std::vector<QuarticTriple> sols;
  for (Integer fa = -bound; fa <= bound; ++fa) {
    if (fa == 0) {
      continue;
    }
    for (Integer fb = -bound; fb <= bound; ++fb) {
      if (fb == 0) {
        continue;
      }
      Integer a2 = fa * fa, b2 = fb * fb;
      Integer s = a2 * a2 + 9 * a2 * b2 + 27 * b2 * b2;
      Integer r = integer_nth_root(s, 2);
      if (r * r == s && r != 0) {
        sols.push_back({fa, fb, -r});
        sols.push_back({fa, fb, r});
      }
    }
  }
  return sols;
}

bool xyz_identity_check(const Integer& fa, const Integer& fm) {
  Integer a2 = fa * fa, m2 = fm * fm;
  Integer s = a2 * a2 + 36 * a2 * m2 + 432 * m2 * m2;
  Integer square = (a2 + 18 * m2) * (a2 + 18 * m2);
  Integer diff = s - square;
  return diff % 4 == 0 && diff / 4 == 27 * m2 * m2;
}

namespace {

// Exact non-negative fourth root test.
std::optional<Integer> exact_fourth_root(const Integer& n) {
  if (n < 0) {
    return std::nullopt;
  }
  Integer r = integer_nth_root(n, 4);
  if (ipow(r, 4) == n) {
    return r;
  }
  return std::nullopt;
}

// Split a positive product known to be 27 * (fourth power) into its
// {27 c^4, d^4} parts, trying both assignments.
struct Split {
  Integer c, d;  // g1 or g2 = 27 c^4, the other = d^4
};

std::optional<Split> split_27(const Integer& g1, const Integer& g2) {
  if (g1 % 27 == 0) {
    auto c = exact_fourth_root(g1 / 27);
    auto d = exact_fourth_root(g2);
    if (c && d) {
      return Split{*c, *d};
    }
  }
  if (g2 % 27 == 0) {
    auto c = exact_fourth_root(g2 / 27);
    auto d = exact_fourth_root(g1);
    if (c && d) {
      return Split{*c, *d};
    }
  }
  return std::nullopt;
}

}  // namespace

DescentOutcome descent_step(const QuarticTriple& t) {
  if (t.fc < 1) {
    throw PreconditionFailed("fc >= 1 is required");
  }
  if (t.fa == 0) {
    throw PreconditionFailed("fa != 0 is required");
  }
  if (t.fb == 0) {
    throw PreconditionFailed("fb != 0 is required");
  }
  if (gcd(t.fa, t.fb) != 1) {
    throw PreconditionFailed("fa and fb must be coprime");
  }
  if (is_even(t.fa)) {
    throw PreconditionFailed("fa odd is required");
  }
  if (is_odd(t.fb)) {
    throw PreconditionFailed("fb even is required");
  }
  if (t.fa % 3 == 0) {
    throw PreconditionFailed("3 does not divide fa is required");
  }
  Integer a2 = t.fa * t.fa, b2 = t.fb * t.fb;
  if (a2 * a2 + 9 * a2 * b2 + 27 * b2 * b2 != t.fc * t.fc) {
    throw NotASolution("the triple does not satisfy the quartic form");
  }

  // Nothing reaches this point (the form has no admissible solutions), but
  // the construction is carried through so the descent is executable end to
  // end on a hypothetical input.
  Integer fm = t.fb / 2;
  Integer f1 = (t.fc + a2) / 2 + 9 * fm * fm;
  Integer f2 = (t.fc - a2) / 2 - 9 * fm * fm;
  // f1 * f2 = 27 fm^4 with coprime positive factors; the 3-part lands
  // wholly on one side.
  if (f1 % 3 == 0) {
    // f1 = 27 a^4 and f2 = b^4 would force 3 | b^4 + fa^2, and -1 is not a
    // quadratic residue mod 3.
    throw std::logic_error("descent split with 27 | f1 is blocked mod 3");
  }
  auto a = exact_fourth_root(f1);
  auto b27 = (f2 % 27 == 0) ? exact_fourth_root(f2 / 27) : std::nullopt;
  if (!a || !b27) {
    throw std::logic_error("coprime factor split failed");
  }
  const Integer& b = *b27;

  // 27 b^4 = ((a^2 + fa)/2 - (9/2) b^2) ((a^2 - fa)/2 - (9/2) b^2); both
  // numerators are even (a, fa odd; b even). Split again as {27 c^4, d^4}.
  Integer g1 = (*a * *a + t.fa - 9 * b * b) / 2;
  Integer g2 = (*a * *a - t.fa - 9 * b * b) / 2;
  auto split = split_27(g1, g2);
  if (!split) {
    throw std::logic_error("second factor split failed");
  }
  QuarticTriple next{split->d, split->c, *a};
  Integer d2 = next.fa * next.fa, c2 = next.fb * next.fb;
  if (d2 * d2 + 9 * d2 * c2 + 27 * c2 * c2 != next.fc * next.fc ||
      next.fc >= t.fc) {
    throw std::logic_error("descent failed to shrink the solution");
  }
  return {next, DescentBranch::Second27};
}

}  // namespace catalan
