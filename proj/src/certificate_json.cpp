#include "catalan/certificate_json.hpp"

#include <stdexcept>
#include <string>

namespace catalan {

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["case_id"] = to_string(cert.case_id);
  j["tuple"] = {{"x", to_string(cert.tuple.x)},
                {"p", to_string(cert.tuple.p)},
                {"y", to_string(cert.tuple.y)},
                {"q", to_string(cert.tuple.q)}};
  j["verdict"] = to_string(cert.verdict);
  j["obstruction"] = to_string(cert.obstruction);
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [name, value] : cert.witness) {
    w[name] = to_string(value);
  }
  j["witness"] = w;
  return j;
}

namespace {

Integer parse_integer(const nlohmann::ordered_json& v, const std::string& field) {
  if (!v.is_string()) {
    throw PreconditionFailed(field + " must be a decimal string");
  }
  try {
    return Integer(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw PreconditionFailed(field + " is not a decimal integer");
  }
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Excluded, Verdict::CatalanSolution,
                    Verdict::DirectCheck}) {
    if (s == to_string(v)) {
      return v;
    }
  }
  throw PreconditionFailed("verdict '" + s + "' is not recognized");
}

Obstruction parse_obstruction(const std::string& s) {
  for (Obstruction o :
       {Obstruction::Mod4, Obstruction::Mod8, Obstruction::OddCofactor,
        Obstruction::InequalityChain, Obstruction::GcdValuation,
        Obstruction::Direct}) {
    if (s == to_string(o)) {
      return o;
    }
  }
  throw PreconditionFailed("obstruction '" + s + "' is not recognized");
}

}  // namespace

Certificate certificate_from_json(const nlohmann::ordered_json& j) {
  try {
    if (!j.is_object() || j.value("schema_version", 0) != 1) {
      throw PreconditionFailed("schema_version must be 1");
    }
    auto case_id = case_id_from_string(j.at("case_id").get<std::string>());
    if (!case_id) {
      throw PreconditionFailed("case_id is not one of I..VIII");
    }
    const auto& t = j.at("tuple");
    CatalanTuple tuple{
        parse_integer(t.at("x"), "tuple.x"), parse_integer(t.at("p"), "tuple.p"),
        parse_integer(t.at("y"), "tuple.y"), parse_integer(t.at("q"), "tuple.q")};
    Certificate cert{*case_id, tuple,
                     parse_verdict(j.at("verdict").get<std::string>()),
                     parse_obstruction(j.at("obstruction").get<std::string>()),
                     {}};
    for (const auto& [name, value] : j.at("witness").items()) {
      cert.witness.emplace_back(name, parse_integer(value, "witness." + name));
    }
    return cert;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw PreconditionFailed(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace catalan
