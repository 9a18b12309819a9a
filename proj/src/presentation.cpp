#include "scl/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "scl/config_io.hpp"

namespace scl {

using nlohmann::json;

namespace {

json polyline_to_json(const Polyline3& l) {
    json rows = json::array();
    for (std::size_t i = 0; i < l.size(); ++i) rows.push_back(json::array({l.t[i], l.p[i].x, l.p[i].y, l.p[i].z}));
    return rows;
}

Polyline3 polyline_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array of [t,x,y,z] rows");
    Polyline3 l;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4 || !std::all_of(row.begin(), row.end(), [](const json& v) { return v.is_number(); }))
            throw ParseError(std::string("rows of \"") + what + "\" must be four numbers");
        l.t.push_back(row[0].get<double>());
        l.p.push_back({row[1].get<double>(), row[2].get<double>(), row[3].get<double>()});
    }
    return l;
}

std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("presentation needs a \"kind\"");
    return j["kind"].get<std::string>();
}

}  // namespace

json tube_to_json(const Tube& t) { return json{{"core", polyline_to_json(t.core)}, {"pushoff", polyline_to_json(t.pushoff)}}; }

Tube tube_from_json(const json& j) {
    if (!j.is_object() || !j.contains("core") || !j.contains("pushoff")) throw ParseError("tube needs \"core\" and \"pushoff\"");
    return {polyline_from_json(j["core"], "core"), polyline_from_json(j["pushoff"], "pushoff")};
}

json to_json(const FatKnot& f, double tol) {
    json j = tube_to_json(f.tube(tol));
    j["kind"] = "knot";
    return j;
}

json to_json(const FatLink& l, double tol) {
    return json{{"kind", "link"},
                {"upper", tube_to_json(l.tube(Strand::upper, tol))},
                {"lower", tube_to_json(l.tube(Strand::lower, tol))}};
}

json to_json(const Presentation& p, double tol) {
    return std::visit([&](const auto& x) { return to_json(x, tol); }, p);
}

Presentation presentation_from_json(const json& j) {
    auto kind = kind_of(j);
    if (kind == "knot") return FatKnot::from_tube(tube_from_json(j));
    if (kind == "link") {
        if (!j.contains("upper") || !j.contains("lower")) throw ParseError("link needs \"upper\" and \"lower\"");
        return FatLink::from_tubes(tube_from_json(j["upper"]), tube_from_json(j["lower"]));
    }
    throw ParseError("unknown kind '" + kind + "'");
}

std::string catalog_dir() {
    if (const char* env = std::getenv("SCL_CATALOG_DIR"); env && *env) return env;
    return SCL_DEFAULT_CATALOG_DIR;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(catalog_dir(), ec))
        if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Presentation load_catalog(const std::string& name) {
    auto path = std::filesystem::path(catalog_dir()) / (name + ".json");
    if (!std::filesystem::exists(path)) throw ParseError("no catalog entry '" + name + "' in " + catalog_dir());
    return presentation_from_json(parse_json_text(read_text(path.string())));
}

FatKnot catalog_knot(const std::string& name) {
    auto p = load_catalog(name);
    if (!std::holds_alternative<FatKnot>(p)) throw ValidationError("catalog entry '" + name + "' is not a knot");
    return std::get<FatKnot>(p);
}

FatLink catalog_link(const std::string& name) {
    auto p = load_catalog(name);
    if (!std::holds_alternative<FatLink>(p)) throw ValidationError("catalog entry '" + name + "' is not a link");
    return std::get<FatLink>(p);
}

Presentation load_presentation(const std::string& ref) {
    if (ref.rfind("catalog:", 0) == 0) return load_catalog(ref.substr(8));
    return presentation_from_json(parse_json_text(read_text(ref)));
}

}  // namespace scl
