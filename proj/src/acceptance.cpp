#include "catalan/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "catalan/descent.hpp"
#include "catalan/engine.hpp"
#include "catalan/gaussian.hpp"
#include "catalan/lte.hpp"
#include "catalan/numtheory.hpp"
#include "catalan/pell.hpp"

namespace catalan::acceptance {

namespace {

const CatalanTuple kSolution{3, 2, 2, 3};
const Integer kDeskCap{"1000000000000000000"};  // 10^18

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = integer_nth_root(n, 2);
  return r * r == n;
}

// 1. The desk-scale sweep finds exactly the one solution, single-worker,
//    inside a minute.
bool uniqueness_sweep(std::ostream& diag) {
  auto t0 = std::chrono::steady_clock::now();
  auto sols = search(200, 13, kDeskCap, 1);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  diag << "  sweep took " << secs << " s\n";
  return sols == std::vector<CatalanTuple>{kSolution} && secs < 60.0;
}

// 2. Pruning changes nothing, and every pruned family re-fails on the only
//    y it could have contained.
bool pruned_equivalence(std::ostream& diag) {
  auto plain = search(200, 13, kDeskCap);
  auto pruned = search_pruned(200, 13, kDeskCap);
  if (pruned.solutions != plain) {
    diag << "  solution lists differ\n";
    return false;
  }
  long violations = 0;
  Integer pruned_families = 0;
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (Integer x = 2; x <= 200; ++x) {
    for (long p : primes) {
      Integer pw = ipow(x, p);
      if (pw > kDeskCap) break;
      for (long q : primes) {
        auto rule = prune_family(x, p, q);
        if (!rule) continue;
        ++pruned_families;
        Integer y = integer_nth_root(pw - 1, q);
        if (y < 2) y = 2;
        if (pw - ipow(y, to_ulong(q, "q")) == 1) ++violations;
      }
    }
  }
  diag << "  " << to_string(pruned_families) << " families pruned, "
       << violations << " soundness violations\n";
  return violations == 0 && pruned_families > 0 &&
         !prune_family(3, 2, 3).has_value();
}

// 3. The valuation formula agrees with expanding the powers, 10^4 times.
bool lte_oracle(std::ostream& diag) {
  std::mt19937_64 rng(0xacce9703);
  const long primes[] = {2, 3, 5, 7};
  long done = 0, bad = 0;
  while (done < 10000) {
    Integer a = Integer(rng() % 81) - 40;
    Integer b = Integer(rng() % 81) - 40;
    unsigned long n = 1 + rng() % 12;
    Integer p = primes[rng() % 4];
    if (a == b || a == 0 || b == 0) continue;
    if ((a * b) % p == 0 || (a - b) % p != 0) continue;
    if (p == 2 && vp(a - b, 2) < 2 && n % 2 != 0) continue;
    if (p == 2 && a + b == 0 && n % 2 == 0) continue;
    auto r = lte_valuation(a, b, n, p);
    if (r.value != vp(ipow(a, n) - ipow(b, n), p)) ++bad;
    ++done;
  }
  diag << "  " << done << " draws, " << bad << " mismatches\n";
  return bad == 0;
}

// 4. The closed imaginary-part sum matches expanded powers, and the 2-adic
//    tail comparison is strict across the grid.
bool gaussian_identities(std::ostream& diag) {
  long checked = 0;
  for (long p : {3, 5, 7, 11, 13}) {
    for (long a = -10; a <= 10; ++a) {
      for (long b = -10; b <= 10; ++b) {
        if (imag_part_formula(p, a, b) != gaussian_pow({a, b}, p).im) {
          diag << "  formula mismatch at p=" << p << " a=" << a << " b=" << b
               << "\n";
          return false;
        }
        ++checked;
      }
    }
  }
  for (long p : {5, 7, 11, 13, 17, 19, 23}) {
    for (long a = 2; a <= 100; a += 2) {
      for (long sign : {1, -1}) {
        if (!qeven4_valuation_check(p, sign * a).strict) {
          diag << "  non-strict at p=" << p << " a=" << sign * a << "\n";
          return false;
        }
        ++checked;
      }
    }
  }
  diag << "  " << checked << " identities checked\n";
  return true;
}

// 5. Fundamental solutions match brute force; powers keep the norm; the
//    pair expansion reduces mod y as predicted.
bool pell_suite(std::ostream& diag) {
  for (Integer d = 2; d <= 30; ++d) {
    if (is_square(d)) continue;
    PellSolution found = pell_fundamental(d);
    for (Integer b = 1; b <= 100000; ++b) {
      Integer s = 1 + d * b * b;
      if (is_square(s)) {
        if (!(found == PellSolution{integer_nth_root(s, 2), b, d})) {
          diag << "  fundamental mismatch at d=" << to_string(d) << "\n";
          return false;
        }
        break;
      }
    }
  }
  for (Integer d = 2; d <= 200; ++d) {
    if (is_square(d)) continue;
    PellSolution f = pell_fundamental(d);
    for (Integer m = 1; m <= 8; ++m) {
      PellSolution s = pell_power(f, m);
      if (s.alpha * s.alpha - d * s.beta * s.beta != 1) {
        diag << "  norm broke at d=" << to_string(d) << " m=" << to_string(m)
             << "\n";
        return false;
      }
    }
  }
  for (Integer y = 2; y <= 50; ++y) {
    if (is_square(y)) continue;
    Integer zeta = pell_fundamental(y).alpha;
    for (Integer m = 1; m <= 6; ++m) {
      auto [A, B] = sqrt_ring_pow(zeta, 1, y, m);
      if ((A - ipow(zeta, to_ulong(m, "m"))) % y != 0 ||
          (B - m * ipow(zeta, to_ulong(m - 1, "m"))) % y != 0) {
        diag << "  congruence broke at y=" << to_string(y) << "\n";
        return false;
      }
    }
  }
  diag << "  fundamentals, norms, congruences all exact\n";
  return true;
}

// 6. Triangular cubes, the cubic diagonal equation, the quartic form, and
//    the factorization identity behave as proved.
bool descent_suite(std::ostream& diag) {
  if (triangular_cube_search(1000000) != std::vector<Integer>{1}) {
    diag << "  unexpected triangular cube\n";
    return false;
  }
  for (const auto& s : euler_search(200)) {
    bool diagonal = s.al == s.be && s.be == s.ga;
    bool cancel = s.al == -s.be && s.ga == 0;
    if (!diagonal && !cancel) {
      diag << "  non-trivial cubic solution " << to_string(s.al) << ","
           << to_string(s.be) << "," << to_string(s.ga) << "\n";
      return false;
    }
  }
  if (!form_search(300).empty()) {
    diag << "  quartic form produced a solution\n";
    return false;
  }
  std::mt19937_64 rng(0xacce9706);
  for (int i = 0; i < 10000; ++i) {
    Integer fa = Integer(rng() % 2000001) - 1000000;
    Integer fm = Integer(rng() % 2000001) - 1000000;
    if (!xyz_identity_check(fa, fm)) {
      diag << "  identity failed at fa=" << to_string(fa)
           << " fm=" << to_string(fm) << "\n";
      return false;
    }
  }
  diag << "  searches empty past the known hits; identity solid\n";
  return true;
}

// 7. The two finishing constants and their strict inequalities, exactly.
bool endgame_constants(std::ostream& diag) {
  using W = std::vector<std::pair<std::string, Integer>>;
  bool ok3 = case_viii_endgame_check(3) ==
             W{{"divisor", 56}, {"q", 7}, {"inequality_holds", 1}};
  bool ok5 = case_viii_endgame_check(5) ==
             W{{"divisor", 7744}, {"q", 11}, {"inequality_holds", 1}};
  diag << "  p=3 " << (ok3 ? "exact" : "WRONG") << ", p=5 "
       << (ok5 ? "exact" : "WRONG") << "\n";
  return ok3 && ok5;
}

// 8. The squared inequality chain holds for every odd prime pair up to 97.
bool cassels_chain(std::ostream& diag) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<long> primes;
  for (long v = 3; v <= 97; v += 2) {
    if (is_prime(v)) primes.push_back(v);
  }
  long pairs = 0;
  for (long p : primes) {
    for (long q : primes) {
      if (p == q) continue;
      if (!cassels_bound_check(p, q)) {
        diag << "  chain failed at p=" << p << " q=" << q << "\n";
        return false;
      }
      ++pairs;
    }
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  diag << "  " << pairs << " pairs in " << secs << " s\n";
  return secs < 5.0;
}

// 9. A thousand sampled certificates re-derive bit-exactly, and the one
//    genuine solution is recognized under every case that covers it.
bool certificate_integrity(std::ostream& diag) {
  std::mt19937_64 rng(0xacce9709);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  long verified = 0;
  while (verified < 1000) {
    Integer x = 2 + rng() % 199;
    Integer p = primes[rng() % 6];
    Integer q = primes[rng() % 6];
    Integer y;
    if (rng() % 2) {
      y = integer_nth_root(ipow(x, to_ulong(p, "p")) - 1, to_ulong(q, "q"));
      if (y < 2) y = 2;
    } else {
      y = 2 + rng() % 199;
    }
    for (CaseId c : classify({x, p, y, q})) {
      Certificate cert = apply_rule(c, {x, p, y, q});
      if (!verify_certificate(cert)) {
        diag << "  certificate failed to re-verify: case " << to_string(c)
             << " x=" << to_string(x) << " p=" << to_string(p)
             << " y=" << to_string(y) << " q=" << to_string(q) << "\n";
        return false;
      }
      ++verified;
    }
  }
  auto cases = classify(kSolution);
  for (CaseId c : cases) {
    if (apply_rule(c, kSolution).verdict != Verdict::CatalanSolution) {
      diag << "  solution misjudged under case " << to_string(c) << "\n";
      return false;
    }
  }
  diag << "  " << verified << " certificates verified; solution honored under "
       << cases.size() << " cases\n";
  return true;
}

}  // namespace

bool run_all(std::ostream& out, std::ostream& diag) {
  struct Criterion {
    const char* slug;
    std::function<bool(std::ostream&)> fn;
  };
  const Criterion criteria[] = {
      {"uniqueness-sweep", uniqueness_sweep},
      {"pruned-equivalence", pruned_equivalence},
      {"lte-oracle", lte_oracle},
      {"gaussian-identities", gaussian_identities},
      {"pell", pell_suite},
      {"descent-suite", descent_suite},
      {"endgame-constants", endgame_constants},
      {"cassels-chain", cassels_chain},
      {"certificate-integrity", certificate_integrity},
  };
  int passed = 0, n = 0;
  for (const auto& c : criteria) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn(diag);
    } catch (const std::exception& e) {
      diag << "  threw: " << e.what() << "\n";
    }
    auto ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    diag << "criterion " << n << " took " << ms << " ms\n";
    out << "criterion " << n << " (" << c.slug << "): "
        << (ok ? "PASS" : "FAIL") << "\n";
    if (ok) ++passed;
  }
  out << passed << "/" << n << " criteria passed\n";
  return passed == n;
}

}  // namespace catalan::acceptance
