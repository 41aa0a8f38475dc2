#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <random>

#include "catalan/certificate_json.hpp"
#include "catalan/engine.hpp"
#include "catalan/numtheory.hpp"

using namespace catalan;

static const CatalanTuple kSolution{3, 2, 2, 3};

TEST_CASE("classify pinned memberships") {
  CHECK(classify(kSolution) ==
        std::vector<CaseId>{CaseId::II, CaseId::IV, CaseId::V, CaseId::VI,
                            CaseId::VII, CaseId::VIII});
  CHECK(classify({8, 3, 2, 3}) ==
        std::vector<CaseId>{CaseId::III, CaseId::VII, CaseId::VIII});
  CHECK(classify({6, 3, 5, 3}) ==
        std::vector<CaseId>{CaseId::VI, CaseId::VII, CaseId::VIII});
  // Membership agrees with an independent evaluation of each hypothesis.
  std::mt19937_64 rng(0xe9914e01);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 500; ++i) {
    CatalanTuple t{Integer(2 + rng() % 199), primes[rng() % 6],
                   Integer(2 + rng() % 199), primes[rng() % 6]};
    auto cases = classify(t);
    auto has = [&](CaseId c) {
      return std::find(cases.begin(), cases.end(), c) != cases.end();
    };
    INFO("x=", t.x, " p=", t.p, " y=", t.y, " q=", t.q);
    CHECK(has(CaseId::I) == (t.q == 2));
    CHECK(has(CaseId::II) == (t.p == 2));
    CHECK(has(CaseId::III) == is_power_of_two(t.x));
    CHECK(has(CaseId::IV) == (is_odd(t.x) && (t.x - 1) % 8 != 0));
    CHECK(has(CaseId::V) == (t.q % t.x == 0));
    CHECK(has(CaseId::VI) == ((t.x - 1) % t.y == 0));
    auto pp = is_perfect_power(t.y);
    CHECK(has(CaseId::VII) == is_prime(pp ? pp->base : t.y));
    CHECK(has(CaseId::VIII) == (t.y <= ipow(4, to_ulong(t.p, "p")) ||
                                t.x <= ipow(4, to_ulong(t.q, "q"))));
    CHECK(std::is_sorted(cases.begin(), cases.end()));
    CHECK(std::adjacent_find(cases.begin(), cases.end()) == cases.end());
  }
}

TEST_CASE("classify rejects junk") {
  CHECK_THROWS_AS(classify({2, 9, 2, 3}), NotNormalized);
  CHECK_THROWS_AS(classify({2, 3, 2, 6}), NotNormalized);
  CHECK_THROWS_AS(classify({1, 2, 2, 3}), PreconditionFailed);
  CHECK_THROWS_AS(classify({3, 2, 2, 1}), PreconditionFailed);
}

TEST_CASE("apply_rule pinned certificates") {
  SUBCASE("case IV mod-8 exclusion") {
    Certificate c = apply_rule(CaseId::IV, {11, 3, 2, 3});
    CHECK(c.case_id == CaseId::IV);
    CHECK(c.verdict == Verdict::Excluded);
    CHECK(c.obstruction == Obstruction::Mod8);
    CHECK(c.witness ==
          std::vector<std::pair<std::string, Integer>>{
              {"x_mod8", 3}, {"lhs_mod8", 2}, {"rhs_mod8", 0}});
  }
  SUBCASE("case III odd-cofactor exclusion") {
    Certificate c = apply_rule(CaseId::III, {8, 3, 3, 5});
    CHECK(c.verdict == Verdict::Excluded);
    CHECK(c.obstruction == Obstruction::OddCofactor);
    // (3^5 + 1)/(3 + 1) = 244/4 = 61, odd and >= 3.
    CHECK(c.witness == std::vector<std::pair<std::string, Integer>>{
                           {"s", 61}});
  }
  SUBCASE("case I mod-4 exclusion") {
    Certificate c = apply_rule(CaseId::I, {4, 2, 3, 2});
    CHECK(c.verdict == Verdict::Excluded);
    CHECK(c.obstruction == Obstruction::Mod4);
    CHECK(c.witness == std::vector<std::pair<std::string, Integer>>{
                           {"lhs_mod4", 0}, {"rhs_mod4", 2}});
  }
  SUBCASE("case V bound exclusion") {
    Certificate c = apply_rule(CaseId::V, {3, 3, 2, 3});
    CHECK(c.verdict == Verdict::Excluded);
    CHECK(c.obstruction == Obstruction::InequalityChain);
    CHECK(c.witness == std::vector<std::pair<std::string, Integer>>{
                           {"y_lower_bound", 8}});
  }
  SUBCASE("case VI records the cofactor gcd") {
    Certificate c = apply_rule(CaseId::VI, {6, 3, 5, 3});
    CHECK(c.verdict == Verdict::DirectCheck);
    CHECK(c.obstruction == Obstruction::GcdValuation);
    // z = (6-1)/5 = 1; (6^3 - 1)/5 = 43; gcd(1, 43) = 1.
    CHECK(c.witness == std::vector<std::pair<std::string, Integer>>{
                           {"z", 1}, {"gcd1", 1}, {"lhs", 216}, {"rhs", 125}});
  }
  SUBCASE("case VII records the ell-adic valuations") {
    Certificate c = apply_rule(CaseId::VII, {8, 3, 2, 3});
    CHECK(c.verdict == Verdict::DirectCheck);
    CHECK(c.obstruction == Obstruction::GcdValuation);
    CHECK(c.witness ==
          std::vector<std::pair<std::string, Integer>>{
              {"ell", 2}, {"a", 0}, {"b", 0}, {"lhs", 512}, {"rhs", 8}});
  }
  SUBCASE("case VIII records the bounds") {
    Certificate c = apply_rule(CaseId::VIII, {8, 3, 2, 3});
    CHECK(c.verdict == Verdict::DirectCheck);
    CHECK(c.obstruction == Obstruction::InequalityChain);
    CHECK(c.witness ==
          std::vector<std::pair<std::string, Integer>>{
              {"y_bound", 64}, {"x_bound", 64}, {"lhs", 512}, {"rhs", 8}});
  }
}

TEST_CASE("the solution is certified as such under every applicable case") {
  for (CaseId c : classify(kSolution)) {
    Certificate cert = apply_rule(c, kSolution);
    CAPTURE(to_string(c));
    CHECK(cert.verdict == Verdict::CatalanSolution);
    CHECK(cert.obstruction == Obstruction::Direct);
    CHECK(cert.witness == std::vector<std::pair<std::string, Integer>>{
                              {"lhs", 9}, {"rhs", 8}});
    CHECK(verify_certificate(cert));
  }
}

TEST_CASE("apply_rule rejects inapplicable cases") {
  CHECK_THROWS_AS(apply_rule(CaseId::I, kSolution), HypothesisNotSatisfied);
  CHECK_THROWS_AS(apply_rule(CaseId::III, {6, 3, 5, 3}),
                  HypothesisNotSatisfied);
}

TEST_CASE("verify_certificate catches tampering") {
  Certificate c = apply_rule(CaseId::IV, {11, 3, 2, 3});
  CHECK(verify_certificate(c));
  Certificate bad = c;
  bad.witness[0].second = 5;
  CHECK_FALSE(verify_certificate(bad));
  bad = c;
  bad.verdict = Verdict::CatalanSolution;
  CHECK_FALSE(verify_certificate(bad));
  // Tampering the tuple to an odd y flips the mod-8 residue and the verdict.
  bad = c;
  bad.tuple.y = 3;
  CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("search pinned sweeps") {
  CHECK(search(100, 7, Integer("1000000000000000")) ==
        std::vector<CatalanTuple>{kSolution});
  CHECK(search(2, 3, 1000) == std::vector<CatalanTuple>{});
  CHECK(search(3, 3, 1000) == std::vector<CatalanTuple>{kSolution});
  CHECK_THROWS_AS(search(1, 3, 1000), PreconditionFailed);
  CHECK_THROWS_AS(search(10, 1, 1000), PreconditionFailed);
}

TEST_CASE("worker partitioning changes nothing") {
  auto base = search(100, 7, Integer("1000000000000000"), 1);
  for (int w : {2, 3, 7}) {
    CAPTURE(w);
    CHECK(search(100, 7, Integer("1000000000000000"), w) == base);
  }
  auto p1 = search_pruned(100, 7, Integer("1000000000000000"), 1);
  auto p4 = search_pruned(100, 7, Integer("1000000000000000"), 4);
  CHECK(p1.solutions == p4.solutions);
  CHECK(p1.stats == p4.stats);
}

TEST_CASE("prune_family pinned rules") {
  CHECK(prune_family(4, 3, 2) == CaseId::I);     // even x, q = 2
  CHECK(prune_family(8, 3, 3) == CaseId::III);   // power of two, q odd
  CHECK(prune_family(11, 3, 3) == CaseId::IV);   // 11 = 3 mod 8
  CHECK(prune_family(17, 3, 17) == CaseId::V);   // 17 = 1 mod 8, x = q
  // The solution family is never pruned.
  CHECK_FALSE(prune_family(3, 2, 3).has_value());
  // x odd, 1 mod 8, not matching any rule.
  CHECK_FALSE(prune_family(9, 3, 3).has_value());
}

TEST_CASE("pruned search equals plain search and its stats add up") {
  Integer x_max = 60, exp_max = 7, cap = Integer("1000000000000");
  auto plain = search(x_max, exp_max, cap);
  auto pruned = search_pruned(x_max, exp_max, cap);
  CHECK(pruned.solutions == plain);
  CHECK(pruned.stats.size() == 8);

  // Independent family count and per-rule tallies.
  std::map<CaseId, Integer> expect;
  for (int c = 0; c < 8; ++c) expect[static_cast<CaseId>(c)] = 0;
  Integer families = 0;
  const long primes[] = {2, 3, 5, 7};
  for (Integer x = 2; x <= x_max; ++x) {
    for (long p : primes) {
      if (ipow(x, p) > cap) break;
      for (long q : primes) {
        ++families;
        if (auto r = prune_family(x, p, q)) ++expect[*r];
      }
    }
  }
  CHECK(pruned.stats == expect);
  Integer total = 0;
  for (const auto& [c, n] : pruned.stats) total += n;
  CHECK(total <= families);
  CHECK(pruned.stats.at(CaseId::IV) > 0);  // x = 3 mod 8 families exist
  CHECK(pruned.stats.at(CaseId::I) > 0);
  // Soundness at this scale: every pruned family re-fails on its only
  // possible y.
  for (Integer x = 2; x <= x_max; ++x) {
    for (long p : primes) {
      Integer pw = ipow(x, p);
      if (pw > cap) break;
      for (long q : primes) {
        auto rule = prune_family(x, p, q);
        if (!rule) continue;
        Integer y = integer_nth_root(pw - 1, q);
        if (y < 2) y = 2;
        INFO("x=", x, " p=", p, " q=", q);
        CHECK(pw - ipow(y, q) != 1);
        // The rule's hypothesis really holds for the materialized tuple.
        auto cases = classify({x, p, y, q});
        CHECK(std::find(cases.begin(), cases.end(), *rule) != cases.end());
      }
    }
  }
}

TEST_CASE("endgame table") {
  auto e3 = case_viii_endgame_check(3);
  CHECK(e3 == std::vector<std::pair<std::string, Integer>>{
                  {"divisor", 56}, {"q", 7}, {"inequality_holds", 1}});
  auto e5 = case_viii_endgame_check(5);
  CHECK(e5 == std::vector<std::pair<std::string, Integer>>{
                  {"divisor", 7744}, {"q", 11}, {"inequality_holds", 1}});
  CHECK_THROWS_AS(case_viii_endgame_check(7), OutOfScope);
  CHECK_THROWS_AS(case_viii_endgame_check(2), OutOfScope);
}

TEST_CASE("cassels bound check") {
  CHECK(cassels_bound_check(3, 5));
  CHECK(cassels_bound_check(5, 3));
  CHECK(cassels_bound_check(3, 97));
  CHECK(cassels_bound_check(97, 3));
  CHECK_THROWS_AS(cassels_bound_check(3, 3), PreconditionFailed);
  CHECK_THROWS_AS(cassels_bound_check(2, 5), PreconditionFailed);
  CHECK_THROWS_AS(cassels_bound_check(9, 5), PreconditionFailed);
}

TEST_CASE("certificate JSON round trip") {
  for (const CatalanTuple& t :
       {CatalanTuple{11, 3, 2, 3}, CatalanTuple{8, 3, 3, 5}, kSolution,
        CatalanTuple{6, 3, 5, 3}}) {
    for (CaseId c : classify(t)) {
      Certificate cert = apply_rule(c, t);
      nlohmann::ordered_json j = certificate_to_json(cert);
      CHECK(j["schema_version"] == 1);
      // Integers ride as decimal strings.
      CHECK(j["tuple"]["x"].is_string());
      CHECK(j["tuple"]["x"].get<std::string>() == to_string(t.x));
      for (const auto& [k, v] : cert.witness) {
        CHECK(j["witness"][k].get<std::string>() == to_string(v));
      }
      Certificate back = certificate_from_json(j);
      CHECK(back == cert);
      // Text round trip too, and stable dumps.
      auto reparsed = nlohmann::ordered_json::parse(j.dump());
      CHECK(certificate_from_json(reparsed) == cert);
      CHECK(certificate_to_json(back).dump() == j.dump());
    }
  }
  CHECK_THROWS_AS(certificate_from_json(nlohmann::ordered_json::parse(
                      R"({"schema_version": 2})")),
                  PreconditionFailed);
}

TEST_CASE("sampled certificates re-verify bit-exactly") {
  std::mt19937_64 rng(0xce47e901);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  int verified = 0;
  while (verified < 300) {
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
    CatalanTuple t{x, p, y, q};
    for (CaseId c : classify(t)) {
      Certificate cert = apply_rule(c, t);
      INFO("x=", x, " p=", p, " y=", y, " q=", q, " case=", to_string(c));
      CHECK(verify_certificate(cert));
      CHECK(certificate_from_json(certificate_to_json(cert)) == cert);
      ++verified;
    }
  }
}
