#pragma once

#include <string>
#include <vector>

#include "wildauto/json_io.hpp"

namespace wildauto {

/// Validator for the JSON-schema subset the shipped schemas use:
/// type (string or array of strings), enum, pattern, properties, required,
/// additionalProperties (boolean), items (single schema), minItems,
/// minimum, oneOf, and local $ref into #/$defs. Returns human-readable
/// violations; empty means the document validates.
std::vector<std::string> schema_violations(const Json& schema, const Json& doc);

}  // namespace wildauto
