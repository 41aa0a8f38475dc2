#include "catalan/engine.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <thread>

#include "catalan/numtheory.hpp"

namespace catalan {

const char* to_string(CaseId c) {
  switch (c) {
    case CaseId::I:
      return "I";
    case CaseId::II:
      return "II";
    case CaseId::III:
      return "III";
    case CaseId::IV:
      return "IV";
    case CaseId::V:
      return "V";
    case CaseId::VI:
      return "VI";
    case CaseId::VII:
      return "VII";
    case CaseId::VIII:
      return "VIII";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Excluded:
      return "Excluded";
    case Verdict::CatalanSolution:
      return "CatalanSolution";
    case Verdict::DirectCheck:
      return "DirectCheck";
  }
  return "?";
}

const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::Mod4:
      return "Mod4";
    case Obstruction::Mod8:
      return "Mod8";
    case Obstruction::OddCofactor:
      return "OddCofactor";
    case Obstruction::InequalityChain:
      return "InequalityChain";
    case Obstruction::GcdValuation:
      return "GcdValuation";
    case Obstruction::Direct:
      return "Direct";
  }
  return "?";
}

std::optional<CaseId> case_id_from_string(const std::string& s) {
  std::string u;
  for (char ch : s) {
    u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  for (int c = 0; c < 8; ++c) {
    CaseId id = static_cast<CaseId>(c);
    if (u == to_string(id)) {
      return id;
    }
  }
  return std::nullopt;
}

namespace {

const CatalanTuple kSolution{3, 2, 2, 3};

// Width-independent primality for internal checks (exact below 2^64, which
// covers everything these code paths meet; BPSW+MR beyond).
bool probab_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

bool is_prime_power(const Integer& y) {
  auto pp = is_perfect_power(y);
  return probab_prime(pp ? pp->base : y);
}

Integer pow_of(const Integer& base, const Integer& exp, const char* what) {
  return ipow(base, to_ulong(exp, what));
}

}  // namespace

std::vector<CaseId> classify(const CatalanTuple& t) {
  if (t.x < 2 || t.p < 2 || t.y < 2 || t.q < 2) {
    throw PreconditionFailed("tuple entries must all be >= 2");
  }
  if (!probab_prime(t.p) || !probab_prime(t.q)) {
    throw NotNormalized("exponents must be prime; run normalize_tuple first");
  }
  std::vector<CaseId> cases;
  if (t.q == 2) cases.push_back(CaseId::I);
  if (t.p == 2) cases.push_back(CaseId::II);
  if (is_power_of_two(t.x)) cases.push_back(CaseId::III);
  if (is_odd(t.x) && (t.x - 1) % 8 != 0) cases.push_back(CaseId::IV);
  if (t.q % t.x == 0) cases.push_back(CaseId::V);
  if ((t.x - 1) % t.y == 0) cases.push_back(CaseId::VI);
  if (is_prime_power(t.y)) cases.push_back(CaseId::VII);
  if (t.y <= pow_of(4, t.p, "p") || t.x <= pow_of(4, t.q, "q")) {
    cases.push_back(CaseId::VIII);
  }
  return cases;
}

namespace {

using Witness = std::vector<std::pair<std::string, Integer>>;

Certificate direct_check(CaseId c, const CatalanTuple& t,
                         Obstruction obstruction, Witness witness) {
  Integer lhs = pow_of(t.x, t.p, "p");
  Integer rhs = pow_of(t.y, t.q, "q");
  if (lhs - rhs == 1) {
    // Normalized, not (3,2,2,3), yet consecutive: impossible.
    throw std::logic_error("direct evaluation found an unexpected solution");
  }
  witness.emplace_back("lhs", lhs);
  witness.emplace_back("rhs", rhs);
  return {c, t, Verdict::DirectCheck, obstruction, std::move(witness)};
}

}  // namespace

Certificate apply_rule(CaseId c, const CatalanTuple& t) {
  auto cases = classify(t);
  if (std::find(cases.begin(), cases.end(), c) == cases.end()) {
    throw HypothesisNotSatisfied("tuple does not satisfy case " +
                                 std::string(to_string(c)));
  }
  if (t == kSolution) {
    return {c, t, Verdict::CatalanSolution, Obstruction::Direct,
            {{"lhs", 9}, {"rhs", 8}}};
  }

  switch (c) {
    case CaseId::I:
      // Even x: x^p = 0 mod 4, while y^2 + 1 is 1 or 2 mod 4.
      if (is_even(t.x)) {
        Integer lhs4 = pow_of(t.x, t.p, "p") % 4;
        Integer rhs4 = (pow_of(t.y, t.q, "q") + 1) % 4;
        return {c,
                t,
                Verdict::Excluded,
                Obstruction::Mod4,
                {{"lhs_mod4", lhs4}, {"rhs_mod4", rhs4}}};
      }
      return direct_check(c, t, Obstruction::Direct, {});

    case CaseId::II:
      return direct_check(c, t, Obstruction::Direct, {});

    case CaseId::III:
      // Odd q: the cofactor (y^q + 1)/(y + 1) is odd and >= 3, so y^q + 1
      // has an odd divisor > 1 and cannot be the power of 2 that x^p is.
      if (is_odd(t.q)) {
        Integer s = (pow_of(t.y, t.q, "q") + 1) / (t.y + 1);
        return {c, t, Verdict::Excluded, Obstruction::OddCofactor, {{"s", s}}};
      }
      return direct_check(c, t, Obstruction::Direct, {});

    case CaseId::IV:
      // Odd p keeps x^p - 1 = x - 1 != 0 mod 8; even y with odd q >= 3
      // makes y^q = 0 mod 8.
      if (is_odd(t.p) && is_odd(t.q) && is_even(t.y)) {
        Integer lhs8 = (pow_of(t.x, t.p, "p") - 1) % 8;
        Integer rhs8 = pow_of(t.y, t.q, "q") % 8;
        return {c,
                t,
                Verdict::Excluded,
                Obstruction::Mod8,
                {{"x_mod8", t.x % 8}, {"lhs_mod8", lhs8}, {"rhs_mod8", rhs8}}};
      }
      return direct_check(c, t, Obstruction::Direct, {});

    case CaseId::V: {
      // x = q odd forces y >= 3^(p-1) - 1; anything below is out.
      if (is_odd(t.q)) {
        Integer bound = pow_of(3, t.p - 1, "p") - 1;
        if (t.y < bound) {
          return {c,
                  t,
                  Verdict::Excluded,
                  Obstruction::InequalityChain,
                  {{"y_lower_bound", bound}}};
        }
      }
      return direct_check(c, t, Obstruction::Direct, {});
    }

    case CaseId::VI: {
      Integer z = (t.x - 1) / t.y;
      Integer cofactor = (pow_of(t.x, t.p, "p") - 1) / (t.x - 1);
      Witness w{{"z", z}, {"gcd1", gcd(z, cofactor)}};
      return direct_check(c, t, Obstruction::GcdValuation, std::move(w));
    }

    case CaseId::VII: {
      auto pp = is_perfect_power(t.y);
      Integer ell = pp ? pp->base : t.y;
      Integer cofactor = (pow_of(t.x, t.p, "p") - 1) / (t.x - 1);
      Witness w{{"ell", ell},
                {"a", vp(t.x - 1, ell)},
                {"b", vp(cofactor, ell)}};
      return direct_check(c, t, Obstruction::GcdValuation, std::move(w));
    }

    case CaseId::VIII: {
      Witness w{{"y_bound", pow_of(4, t.p, "p")},
                {"x_bound", pow_of(4, t.q, "q")}};
      return direct_check(c, t, Obstruction::InequalityChain, std::move(w));
    }
  }
  throw std::logic_error("unhandled case id");
}

bool verify_certificate(const Certificate& cert) {
  try {
    Certificate fresh = apply_rule(cert.case_id, cert.tuple);
    if (!(fresh == cert)) {
      return false;
    }
    // Verdict semantics, re-checked by exact evaluation.
    Integer lhs = pow_of(cert.tuple.x, cert.tuple.p, "p");
    Integer rhs = pow_of(cert.tuple.y, cert.tuple.q, "q");
    bool solves = lhs - rhs == 1;
    if (cert.verdict == Verdict::CatalanSolution) {
      return solves && cert.tuple == kSolution;
    }
    return !solves;
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<CaseId> prune_family(const Integer& x, const Integer& p,
                                   const Integer& q) {
  // First match in case order. Every rule here is independent of y: the
  // family (x, p, *, q) dies before any root extraction.
  if (q == 2 && is_even(x)) {
    return CaseId::I;  // x^p = 0 mod 4 vs y^2 + 1 in {1, 2} mod 4
  }
  if (is_power_of_two(x) && is_odd(q)) {
    return CaseId::III;  // odd cofactor of y^q + 1 vs a power of 2
  }
  if (is_odd(x) && (x - 1) % 8 != 0 && is_odd(p) && is_odd(q)) {
    // Any candidate y is even by parity, so the mod-8 clash is forced.
    return CaseId::IV;
  }
  if (q % x == 0 && is_odd(q)) {
    // x = q odd: every solution needs y >= 3^(p-1) - 1; if even the largest
    // candidate root is below the bound, the whole family is out.
    Integer bound = pow_of(3, p - 1, "p");
    bound -= 1;
    if (pow_of(x, p, "p") - 1 < ipow(bound, to_ulong(q, "q"))) {
      return CaseId::V;
    }
  }
  return std::nullopt;
}

namespace {

bool tuple_less(const CatalanTuple& a, const CatalanTuple& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.p != b.p) return a.p < b.p;
  if (a.y != b.y) return a.y < b.y;
  return a.q < b.q;
}

std::vector<Integer> primes_up_to(const Integer& n) {
  std::vector<Integer> primes;
  for (Integer v = 2; v <= n; ++v) {
    if (probab_prime(v)) {
      primes.push_back(v);
    }
  }
  return primes;
}

struct BlockResult {
  std::vector<CatalanTuple> solutions;
  std::map<CaseId, Integer> stats;
};

// Scan x in [x_lo, x_hi]; with pruning enabled, families are counted into
// stats and skipped before the root extraction.
BlockResult scan_block(Integer x_lo, Integer x_hi,
                       const std::vector<Integer>& primes, Integer power_cap,
                       bool prune) {
  BlockResult r;
  for (int c = 0; c < 8; ++c) {
    r.stats[static_cast<CaseId>(c)] = 0;
  }
  for (Integer x = x_lo; x <= x_hi; ++x) {
    for (const Integer& p : primes) {
      Integer n = pow_of(x, p, "p");
      if (n > power_cap) {
        break;
      }
      for (const Integer& q : primes) {
        if (prune) {
          if (auto rule = prune_family(x, p, q)) {
            r.stats[*rule] += 1;
            continue;
          }
        }
        Integer y = integer_nth_root(n - 1, q);
        if (y >= 2 && ipow(y, to_ulong(q, "q")) == n - 1) {
          r.solutions.push_back({x, p, y, q});
        }
      }
    }
  }
  std::sort(r.solutions.begin(), r.solutions.end(), tuple_less);
  return r;
}

BlockResult run_scan(const Integer& x_max, const Integer& exp_max,
                     const Integer& power_cap, int workers, bool prune) {
  if (x_max < 2 || exp_max < 2 || power_cap < 2) {
    throw PreconditionFailed("search bounds must all be >= 2");
  }
  if (workers < 1) {
    throw PreconditionFailed("workers must be >= 1");
  }
  auto primes = primes_up_to(exp_max);

  Integer span = x_max - 1;  // number of x values in [2, x_max]
  Integer w{workers};
  if (w > span) {
    w = span;
  }
  Integer chunk = (span + w - 1) / w;

  std::vector<BlockResult> results(to_ulong(w, "workers"));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(results.size());
  for (unsigned long i = 0; i < results.size(); ++i) {
    Integer lo = 2 + chunk * static_cast<unsigned long>(i);
    Integer hi = lo + chunk - 1;
    if (hi > x_max) {
      hi = x_max;
    }
    threads.emplace_back([&, i, lo, hi]() {
      try {
        results[i] = scan_block(lo, hi, primes, power_cap, prune);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }

  BlockResult merged;
  for (int c = 0; c < 8; ++c) {
    merged.stats[static_cast<CaseId>(c)] = 0;
  }
  // Blocks are contiguous ascending in x, so appending in index order keeps
  // the global (x, p, y, q) order.
  for (auto& r : results) {
    merged.solutions.insert(merged.solutions.end(), r.solutions.begin(),
                            r.solutions.end());
    for (const auto& [c, n] : r.stats) {
      merged.stats[c] += n;
    }
  }
  return merged;
}

}  // namespace

std::vector<CatalanTuple> search(const Integer& x_max, const Integer& exp_max,
                                 const Integer& power_cap, int workers) {
  return run_scan(x_max, exp_max, power_cap, workers, false).solutions;
}

PrunedSearchResult search_pruned(const Integer& x_max, const Integer& exp_max,
                                 const Integer& power_cap, int workers) {
  BlockResult r = run_scan(x_max, exp_max, power_cap, workers, true);
  return {std::move(r.solutions), std::move(r.stats)};
}

std::vector<std::pair<std::string, Integer>> case_viii_endgame_check(
    const Integer& p) {
  if (p != 3 && p != 5) {
    throw OutOfScope("endgame table covers p in {3, 5} only");
  }
  // q must divide (p+1)^p - 2^p; its unique odd prime factor other than p
  // pins q down (56 = 2^3 * 7, 7744 = 2^6 * 11^2).
  Integer divisor = pow_of(p + 1, p, "p") - pow_of(2, p, "p");
  Integer q = 0;
  Integer rest = divisor;
  for (Integer f = 2; f * f <= rest; ++f) {
    while (rest % f == 0) {
      rest /= f;
      if (is_odd(f) && f != p) {
        q = f;
      }
    }
  }
  if (rest > 1 && is_odd(rest) && rest != p) {
    q = rest;
  }
  if (q == 0 || !probab_prime(q)) {
    throw std::logic_error("endgame divisor lost its odd prime factor");
  }
  // The closing inequality (p^(q-1) + 1)^p < ((p+1)^p - 1)^q, exactly.
  Integer lhs = pow_of(pow_of(p, q - 1, "q") + 1, p, "p");
  Integer rhs = pow_of(pow_of(p + 1, p, "p") - 1, q, "q");
  return {{"divisor", divisor},
          {"q", q},
          {"inequality_holds", lhs < rhs ? 1 : 0}};
}

bool cassels_bound_check(const Integer& p, const Integer& q) {
  if (p < 3 || is_even(p) || !probab_prime(p) || q < 3 || is_even(q) ||
      !probab_prime(q) || p == q) {
    throw PreconditionFailed("p and q must be distinct odd primes");
  }
  // 1 + p^(q-1) (2q-1)^q > (2q sqrt(p))^q, squared to stay in integers,
  // plus the companion 2^q < p^(q-1).
  Integer lhs = 1 + pow_of(p, q - 1, "q") * pow_of(2 * q - 1, q, "q");
  Integer rhs_sq = pow_of(4 * q * q * p, q, "q");
  bool main_holds = lhs * lhs > rhs_sq;
  bool companion = pow_of(2, q, "q") < pow_of(p, q - 1, "q");
  return main_holds && companion;
}

}  // namespace catalan
