// Python face of the toolkit. Integers cross the boundary as decimal
// strings so values beyond 64 bits survive the trip in both directions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "catalan/certificate_json.hpp"
#include "catalan/engine.hpp"
#include "catalan/errors.hpp"
#include "catalan/lte.hpp"
#include "catalan/numtheory.hpp"
#include "catalan/pell.hpp"

namespace py = pybind11;

namespace {

catalan::Integer to_integer(const py::object& o) {
  if (!py::isinstance<py::int_>(o)) {
    throw py::type_error("expected an int, got " +
                         std::string(py::str(py::type::of(o))));
  }
  return catalan::Integer(py::str(o).cast<std::string>());
}

py::int_ to_py(const catalan::Integer& n) {
  PyObject* v = PyLong_FromString(catalan::to_string(n).c_str(), nullptr, 10);
  if (v == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(v);
}

catalan::CatalanTuple tuple_from(const py::object& x, const py::object& p,
                                 const py::object& y, const py::object& q) {
  return {to_integer(x), to_integer(p), to_integer(y), to_integer(q)};
}

py::dict certificate_to_dict(const catalan::Certificate& cert) {
  py::dict d;
  d["schema_version"] = 1;
  d["case_id"] = catalan::to_string(cert.case_id);
  py::dict t;
  t["x"] = to_py(cert.tuple.x);
  t["p"] = to_py(cert.tuple.p);
  t["y"] = to_py(cert.tuple.y);
  t["q"] = to_py(cert.tuple.q);
  d["tuple"] = t;
  d["verdict"] = catalan::to_string(cert.verdict);
  d["obstruction"] = catalan::to_string(cert.obstruction);
  py::dict w;
  for (const auto& [key, value] : cert.witness) {
    w[key.c_str()] = to_py(value);
  }
  d["witness"] = w;
  return d;
}

// Routes through the JSON schema so dict verification and file verification
// are the same code path.
catalan::Certificate certificate_from_dict(const py::dict& d) {
  nlohmann::ordered_json j;
  try {
    j["schema_version"] = d["schema_version"].cast<int>();
    j["case_id"] = d["case_id"].cast<std::string>();
    auto t = d["tuple"].cast<py::dict>();
    nlohmann::ordered_json jt;
    for (const char* k : {"x", "p", "y", "q"}) {
      jt[k] = catalan::to_string(to_integer(t[k]));
    }
    j["tuple"] = jt;
    j["verdict"] = d["verdict"].cast<std::string>();
    j["obstruction"] = d["obstruction"].cast<std::string>();
    nlohmann::ordered_json jw = nlohmann::ordered_json::object();
    for (auto item : d["witness"].cast<py::dict>()) {
      jw[item.first.cast<std::string>()] =
          catalan::to_string(to_integer(py::reinterpret_borrow<py::object>(
              item.second)));
    }
    j["witness"] = jw;
  } catch (const py::error_already_set&) {
    throw catalan::PreconditionFailed("malformed certificate dict");
  } catch (const py::cast_error&) {
    throw catalan::PreconditionFailed("malformed certificate dict");
  }
  return catalan::certificate_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact integer toolkit for x^p - y^q = 1";

  py::register_exception<catalan::Error>(m, "Error");

  m.def(
      "lte_valuation",
      [](const py::object& a, const py::object& b, const py::object& n,
         const py::object& p) {
        auto r = catalan::lte_valuation(to_integer(a), to_integer(b),
                                        to_integer(n), to_integer(p));
        return py::make_tuple(to_py(r.value), catalan::to_string(r.branch));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("p"),
      "vp(a^n - b^n) from the closed form; returns (value, branch).");

  m.def(
      "lemma2_transfer",
      [](const py::object& a, const py::object& b, const py::object& p,
         const py::object& q) {
        return to_py(catalan::lemma2_transfer(to_integer(a), to_integer(b),
                                              to_integer(p), to_integer(q)));
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"),
      "If a^p - b^p = c^q with p not dividing c, the t with t^q = a - b.");

  m.def(
      "integer_nth_root",
      [](const py::object& n, const py::object& k) {
        return to_py(catalan::integer_nth_root(to_integer(n), to_integer(k)));
      },
      py::arg("n"), py::arg("k"), "floor(n^(1/k)) for n >= 0, k >= 1.");

  m.def(
      "pell_fundamental",
      [](const py::object& d) {
        auto s = catalan::pell_fundamental(to_integer(d));
        return py::make_tuple(to_py(s.alpha), to_py(s.beta));
      },
      py::arg("d"),
      "Fundamental (alpha, beta) with alpha^2 - d*beta^2 = 1, non-square d.");

  m.def(
      "search",
      [](const py::object& x_max, const py::object& exp_max,
         const py::object& power_cap, int workers) {
        auto sols = catalan::search(to_integer(x_max), to_integer(exp_max),
                                    to_integer(power_cap), workers);
        py::list out;
        for (const auto& s : sols) {
          out.append(py::make_tuple(to_py(s.x), to_py(s.p), to_py(s.y),
                                    to_py(s.q)));
        }
        return out;
      },
      py::arg("x_max"), py::arg("exp_max"), py::arg("power_cap"),
      py::arg("workers") = 1,
      "All solutions of x^p - y^q = 1 in the box, as (x, p, y, q) tuples.");

  m.def(
      "classify",
      [](const py::object& x, const py::object& p, const py::object& y,
         const py::object& q) {
        std::vector<std::string> names;
        for (catalan::CaseId c : catalan::classify(tuple_from(x, p, y, q))) {
          names.emplace_back(catalan::to_string(c));
        }
        return names;
      },
      py::arg("x"), py::arg("p"), py::arg("y"), py::arg("q"),
      "Roman-numeral names of the cases whose hypothesis the tuple satisfies.");

  m.def(
      "certify",
      [](const py::object& x, const py::object& p, const py::object& y,
         const py::object& q, const std::string& case_name) {
        auto c = catalan::case_id_from_string(case_name);
        if (!c) {
          throw catalan::PreconditionFailed("unknown case: " + case_name);
        }
        return certificate_to_dict(
            catalan::apply_rule(*c, tuple_from(x, p, y, q)));
      },
      py::arg("x"), py::arg("p"), py::arg("y"), py::arg("q"), py::arg("case"),
      "Apply one case's rule and return the re-checkable certificate.");

  m.def(
      "verify_certificate",
      [](const py::dict& cert) {
        return catalan::verify_certificate(certificate_from_dict(cert));
      },
      py::arg("cert"),
      "Recompute a certificate from its tuple and compare bit-exactly.");

  m.def(
      "cassels_bound_check",
      [](const py::object& p, const py::object& q) {
        return catalan::cassels_bound_check(to_integer(p), to_integer(q));
      },
      py::arg("p"), py::arg("q"),
      "The squared inequality chain for distinct odd primes p, q.");
}
