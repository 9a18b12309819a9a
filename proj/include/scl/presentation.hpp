#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scl/actions.hpp"
#include "scl/fat.hpp"

namespace scl {

// {"kind":"knot","core":[[t,x,y,z],...],"pushoff":[...]}
// {"kind":"link","upper":{"core":...,"pushoff":...},"lower":{...}}
nlohmann::json tube_to_json(const Tube& t);
Tube tube_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FatKnot& f, double tol = kChordTolerance);
nlohmann::json to_json(const FatLink& l, double tol = kChordTolerance);
nlohmann::json to_json(const Presentation& p, double tol = kChordTolerance);
/// Parses and validates a knot or link; raises ParseError or GeometryError.
Presentation presentation_from_json(const nlohmann::json& j);

/// SCL_CATALOG_DIR if set, else the directory configured at build time.
std::string catalog_dir();
std::vector<std::string> catalog_names();
Presentation load_catalog(const std::string& name);
FatKnot catalog_knot(const std::string& name);
FatLink catalog_link(const std::string& name);

/// `catalog:NAME`, a file path, or `-` for stdin.
Presentation load_presentation(const std::string& ref);

std::string read_text(const std::string& path);

}  // namespace scl
