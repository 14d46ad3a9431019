#pragma once

#include <json.hpp>

#include <string>

#include "rknot/diagram.hpp"
#include "rknot/two_bridge.hpp"

namespace rknot {

// {"a": 3, "b": 8, "z_coefficients": ["p/q", ...], "degree_triple": [3,8,10]}
nlohmann::json parametrization_to_json(const Parametrization& p);
Parametrization parametrization_from_json(const nlohmann::json& j);

// {"alpha": "...", "beta": "...", "mirror": bool, "crossing_number": "..."}
nlohmann::json knot_to_json(const TwoBridgeKnot& k);

// Identification report: the knot fields plus "conway_form".
nlohmann::json identification_report(const Parametrization& p);

std::string rational_to_string(const Rat& r);
Rat rational_from_string(const std::string& s);

} // namespace rknot
