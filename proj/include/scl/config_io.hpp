#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "scl/cubes.hpp"
#include "scl/scl_operad.hpp"

namespace scl {

/// Malformed input text (as opposed to well-formed but invalid data).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"dim": n, "mode": "over|disjoint|lowerface", "cubes": [[["p/q","r/s"], ...], ...]}
nlohmann::json config_to_json(const CubeConfig& c);
CubeConfig config_from_json(const nlohmann::json& j);

// Configuration fields plus {"colors": [...], "output": "o"}.
nlohmann::json scl_to_json(const SclElement& e);
SclElement scl_from_json(const nlohmann::json& j);

/// Parses text into JSON, raising ParseError on syntax errors.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace scl
