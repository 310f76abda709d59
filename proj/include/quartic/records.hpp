#pragma once

// JSON-lines records. Integers and rationals are always strings.

#include <string>

#include <json.hpp>

#include "quartic/method_two.hpp"
#include "quartic/quadruple.hpp"
#include "quartic/search.hpp"

namespace quartic::records {

using Json = nlohmann::ordered_json;

// {"type":"quadruple","h","A","B","C","D","provenance","detail","chain","twist_t"}
Json to_json(const Quadruple& q);
// {"type":"hvalue","z","multiple_index","h","Y","point"}
Json to_json(const method_two::HValue& hv);
// {"type":"search_hit","h","A","B","C","D","max"}
Json to_json(const search::SearchHit& hit);

// Accepts "quadruple" and "search_hit" records. Throws InvalidInput.
Quadruple quadruple_from_json(const Json& j);

std::string to_line(const Json& j);

}  // namespace quartic::records
