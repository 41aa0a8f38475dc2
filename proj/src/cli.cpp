#include "catalan/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "catalan/acceptance.hpp"
#include "catalan/certificate_json.hpp"
#include "catalan/descent.hpp"
#include "catalan/engine.hpp"
#include "catalan/lte.hpp"
#include "catalan/pell.hpp"

namespace catalan::cli {

namespace {

Integer parse_int(const std::string& s, const char* what) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw PreconditionFailed(std::string(what) + " ('" + s +
                             "') is not a decimal integer");
  }
}

void enforce_cap(const Integer& value, long cap, const char* what) {
  if (value > cap) {
    throw PreconditionFailed(std::string(what) + " is capped at " +
                             std::to_string(cap));
  }
}

int default_workers() {
  const char* env = std::getenv("CATALAN_WORKERS");
  if (env == nullptr) {
    return 1;
  }
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 64) {
    return 1;
  }
  return static_cast<int>(v);
}

std::string solution_line(const CatalanTuple& t) {
  return to_string(t.x) + "^" + to_string(t.p) + " - " + to_string(t.y) + "^" +
         to_string(t.q) + " = 1";
}

nlohmann::ordered_json tuple_json(const CatalanTuple& t) {
  return {{"x", to_string(t.x)},
          {"p", to_string(t.p)},
          {"y", to_string(t.y)},
          {"q", to_string(t.q)}};
}

std::string certificate_line(const Certificate& c) {
  std::string line = "case " + std::string(to_string(c.case_id)) + ": " +
                     to_string(c.verdict) + " via " +
                     to_string(c.obstruction) + " [";
  bool first = true;
  for (const auto& [name, value] : c.witness) {
    if (!first) {
      line += " ";
    }
    first = false;
    line += name + "=" + to_string(value);
  }
  line += "]";
  return line;
}

struct Args {
  // search
  std::string x_max, exp_max, cap;
  bool pruned = false;
  bool json = false;
  int workers = 0;
  // positional integers (classify/certify/lte/cassels/pell)
  std::vector<std::string> pos;
  std::string case_name;
  std::string power = "1";
  // descent
  std::string triangular_bound, euler_bound, form_bound;
};

int run_search(const Args& a, std::ostream& out) {
  Integer x_max = parse_int(a.x_max, "--x-max");
  Integer exp_max = parse_int(a.exp_max, "--exp-max");
  Integer cap = parse_int(a.cap, "--cap");
  enforce_cap(x_max, 1000000, "--x-max");
  enforce_cap(exp_max, 64, "--exp-max");
  int workers = a.workers > 0 ? a.workers : default_workers();

  std::vector<CatalanTuple> solutions;
  std::map<CaseId, Integer> stats;
  if (a.pruned) {
    auto r = search_pruned(x_max, exp_max, cap, workers);
    solutions = std::move(r.solutions);
    stats = std::move(r.stats);
  } else {
    solutions = search(x_max, exp_max, cap, workers);
  }

  if (a.json) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["solutions"] = nlohmann::ordered_json::array();
    for (const auto& t : solutions) {
      j["solutions"].push_back(tuple_json(t));
    }
    if (a.pruned) {
      nlohmann::ordered_json s = nlohmann::ordered_json::object();
      for (const auto& [c, n] : stats) {
        s[to_string(c)] = to_string(n);
      }
      j["stats"] = s;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& t : solutions) {
    out << solution_line(t) << "\n";
  }
  if (a.pruned) {
    out << "pruned:";
    for (const auto& [c, n] : stats) {
      out << " " << to_string(c) << "=" << to_string(n);
    }
    out << "\n";
  }
  return 0;
}

int run_classify(const Args& a, std::ostream& out) {
  CatalanTuple t{parse_int(a.pos[0], "X"), parse_int(a.pos[1], "P"),
                 parse_int(a.pos[2], "Y"), parse_int(a.pos[3], "Q")};
  auto cases = classify(t);
  std::string line;
  for (CaseId c : cases) {
    if (!line.empty()) {
      line += " ";
    }
    line += to_string(c);
  }
  out << line << "\n";
  return 0;
}

int run_certify(const Args& a, std::ostream& out) {
  CatalanTuple t{parse_int(a.pos[0], "X"), parse_int(a.pos[1], "P"),
                 parse_int(a.pos[2], "Y"), parse_int(a.pos[3], "Q")};
  std::vector<Certificate> certs;
  if (!a.case_name.empty()) {
    auto c = case_id_from_string(a.case_name);
    if (!c) {
      throw PreconditionFailed("--case must be one of I..VIII");
    }
    certs.push_back(apply_rule(*c, t));
  } else {
    for (CaseId c : classify(t)) {
      certs.push_back(apply_rule(c, t));
    }
  }
  if (a.json) {
    if (!a.case_name.empty()) {
      out << certificate_to_json(certs.front()).dump(2) << "\n";
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& c : certs) {
        arr.push_back(certificate_to_json(c));
      }
      out << arr.dump(2) << "\n";
    }
    return 0;
  }
  for (const auto& c : certs) {
    out << certificate_line(c) << "\n";
  }
  return 0;
}

int run_lte(const Args& a, std::ostream& out) {
  auto r = lte_valuation(parse_int(a.pos[0], "A"), parse_int(a.pos[1], "B"),
                         parse_int(a.pos[2], "N"), parse_int(a.pos[3], "P"));
  out << to_string(r.value) << "\n";
  return 0;
}

int run_pell(const Args& a, std::ostream& out) {
  Integer d = parse_int(a.pos[0], "D");
  Integer m = parse_int(a.power, "--power");
  PellSolution s = pell_fundamental(d);
  if (m != 1) {
    s = pell_power(s, m);
  }
  out << to_string(s.alpha) << " " << to_string(s.beta) << "\n";
  return 0;
}

int run_descent(const Args& a, std::ostream& out) {
  int given = (!a.triangular_bound.empty() ? 1 : 0) +
              (!a.euler_bound.empty() ? 1 : 0) + (!a.form_bound.empty() ? 1 : 0);
  if (given != 1) {
    throw PreconditionFailed(
        "exactly one of --triangular-bound, --euler-bound, --form-bound");
  }
  if (!a.triangular_bound.empty()) {
    Integer b = parse_int(a.triangular_bound, "--triangular-bound");
    enforce_cap(b, 10000000, "--triangular-bound");
    for (const Integer& m : triangular_cube_search(b)) {
      out << to_string(m) << "\n";
    }
  } else if (!a.euler_bound.empty()) {
    Integer b = parse_int(a.euler_bound, "--euler-bound");
    enforce_cap(b, 2000, "--euler-bound");
    for (const auto& s : euler_search(b)) {
      out << to_string(s.al) << " " << to_string(s.be) << " " << to_string(s.ga)
          << "\n";
    }
  } else {
    Integer b = parse_int(a.form_bound, "--form-bound");
    enforce_cap(b, 2000, "--form-bound");
    for (const auto& s : form_search(b)) {
      out << to_string(s.fa) << " " << to_string(s.fb) << " " << to_string(s.fc)
          << "\n";
    }
  }
  return 0;
}

int run_cassels(const Args& a, std::ostream& out) {
  bool ok = cassels_bound_check(parse_int(a.pos[0], "P"),
                                parse_int(a.pos[1], "Q"));
  out << (ok ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact integer toolkit for the equation x^p - y^q = 1",
               "catalan"};
  app.require_subcommand(1);
  Args a;

  auto* search_cmd = app.add_subcommand(
      "search", "Sweep x^p - y^q = 1 over a bounded grid (x-max <= 10^6)");
  search_cmd->add_option("--x-max", a.x_max, "Largest base x")->required();
  search_cmd->add_option("--exp-max", a.exp_max, "Largest prime exponent (<= 64)")
      ->required();
  search_cmd->add_option("--cap", a.cap, "Upper bound on x^p")->required();
  search_cmd->add_flag("--pruned", a.pruned,
                       "Drop families via the case rules; print stats");
  search_cmd->add_flag("--json", a.json, "Emit JSON instead of text");
  search_cmd->add_option("--workers", a.workers,
                         "Concurrent workers (default $CATALAN_WORKERS or 1)")
      ->check(CLI::Range(1, 64));

  auto* classify_cmd =
      app.add_subcommand("classify", "List the cases a tuple falls under");
  classify_cmd->add_option("X", a.pos)->required()->expected(4);

  auto* certify_cmd = app.add_subcommand(
      "certify", "Produce self-verifying certificates for a tuple");
  certify_cmd->add_option("X", a.pos)->required()->expected(4);
  certify_cmd->add_option("--case", a.case_name,
                          "Restrict to one case (I..VIII)");
  certify_cmd->add_flag("--json", a.json, "Emit JSON instead of text");

  auto* lte_cmd = app.add_subcommand(
      "lte", "Valuation of a^n - b^n via the lifting lemma: lte A B N P");
  lte_cmd->add_option("A", a.pos)->required()->expected(4);

  auto* pell_cmd =
      app.add_subcommand("pell", "Fundamental solution of a^2 - d b^2 = 1");
  pell_cmd->add_option("D", a.pos)->required()->expected(1);
  pell_cmd->add_option("--power", a.power, "Raise the solution to this power");

  auto* descent_cmd = app.add_subcommand(
      "descent",
      "Run one of the bounded descent searches (euler/form bounds <= 2000, "
      "triangular <= 10^7)");
  descent_cmd->add_option("--triangular-bound", a.triangular_bound,
                          "Scan m with m(m+1)/2 a cube");
  descent_cmd->add_option("--euler-bound", a.euler_bound,
                          "Scan al^3 + be^3 = 2 ga^3");
  descent_cmd->add_option("--form-bound", a.form_bound,
                          "Scan fa^4 + 9 fa^2 fb^2 + 27 fb^4 = fc^2");

  auto* cassels_cmd = app.add_subcommand(
      "cassels", "Verify the exact inequality chain for odd primes P Q");
  cassels_cmd->add_option("P", a.pos)->required()->expected(2);

  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Run the full acceptance suite");

  try {
    // CLI11's vector overload consumes a reversed argv.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (search_cmd->parsed()) return run_search(a, out);
    if (classify_cmd->parsed()) return run_classify(a, out);
    if (certify_cmd->parsed()) return run_certify(a, out);
    if (lte_cmd->parsed()) return run_lte(a, out);
    if (pell_cmd->parsed()) return run_pell(a, out);
    if (descent_cmd->parsed()) return run_descent(a, out);
    if (cassels_cmd->parsed()) return run_cassels(a, out);
    if (selfcheck_cmd->parsed()) {
      return acceptance::run_all(out, err) ? 0 : 1;
    }
    err << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace catalan::cli
