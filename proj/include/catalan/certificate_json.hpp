#pragma once

#include <json.hpp>

#include "catalan/engine.hpp"

namespace catalan {

// Stable wire form, schema_version 1. Every integer is a decimal string so
// arbitrary-precision values survive any JSON reader. Fields:
//   schema_version, case_id, tuple {x, p, y, q}, verdict, obstruction,
//   witness (object, insertion-ordered as produced by apply_rule).
nlohmann::ordered_json certificate_to_json(const Certificate& cert);

// Inverse of certificate_to_json; malformed documents raise
// PreconditionFailed naming the offending field.
Certificate certificate_from_json(const nlohmann::ordered_json& j);

}  // namespace catalan
