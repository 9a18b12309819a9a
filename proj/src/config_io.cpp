#include "scl/config_io.hpp"

namespace scl {

using nlohmann::json;

namespace {

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw ParseError("rational must be a string \"p/q\" or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<LittleCube> cubes_from(const json& j, std::size_t dim) {
    if (!j.is_array()) throw ParseError("\"cubes\" must be an array");
    std::vector<LittleCube> cubes;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& cj = j[i];
        if (!cj.is_array() || cj.size() != dim)
            throw ParseError("cube " + std::to_string(i + 1) + " must list " + std::to_string(dim) + " factors");
        std::vector<AffineInc> factors;
        for (const auto& fj : cj) {
            if (!fj.is_array() || fj.size() != 2) throw ParseError("a factor is a [scale, offset] pair");
            Rational scale = rational_from(fj[0]);
            if (scale.sign() <= 0) throw ParseError("factor scale must be positive, got " + scale.str());
            factors.emplace_back(scale, rational_from(fj[1]));
        }
        cubes.emplace_back(std::move(factors));
    }
    return cubes;
}

json cubes_to(const std::vector<LittleCube>& cubes) {
    json arr = json::array();
    for (const auto& c : cubes) {
        json cj = json::array();
        for (const auto& f : c.factors()) cj.push_back(json::array({f.scale().str(), f.offset().str()}));
        arr.push_back(std::move(cj));
    }
    return arr;
}

std::size_t dim_from(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() <= 0)
        throw ParseError("configuration needs a positive integer \"dim\"");
    return j["dim"].get<std::size_t>();
}

}  // namespace

json config_to_json(const CubeConfig& c) {
    return json{{"dim", c.dim()}, {"mode", to_string(c.mode())}, {"cubes", cubes_to(c.cubes())}};
}

CubeConfig config_from_json(const json& j) {
    std::size_t dim = dim_from(j);
    CubeMode mode = CubeMode::overlapping;
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw ParseError("\"mode\" must be a string");
        try {
            mode = cube_mode_from_string(j["mode"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (!j.contains("cubes")) throw ParseError("configuration needs \"cubes\"");
    return CubeConfig(dim, cubes_from(j["cubes"], dim), mode);
}

json scl_to_json(const SclElement& e) {
    json colors = json::array();
    for (auto c : e.inputs()) colors.push_back(to_string(c));
    return json{{"dim", 2},
                {"mode", to_string(e.config().mode())},
                {"cubes", cubes_to(e.config().cubes())},
                {"colors", colors},
                {"output", to_string(e.output())}};
}

SclElement scl_from_json(const json& j) {
    std::size_t dim = dim_from(j);
    if (dim != 2) throw ParseError("SCL elements are 2-dimensional");
    if (!j.contains("colors") || !j["colors"].is_array()) throw ParseError("SCL element needs \"colors\"");
    if (!j.contains("output") || !j["output"].is_string()) throw ParseError("SCL element needs \"output\"");
    if (!j.contains("cubes")) throw ParseError("SCL element needs \"cubes\"");
    try {
        std::vector<Color> colors;
        for (const auto& c : j["colors"]) {
            if (!c.is_string()) throw ParseError("colors are strings");
            colors.push_back(color_from_string(c.get<std::string>()));
        }
        Color out = color_from_string(j["output"].get<std::string>());
        return SclElement(std::move(colors), out, cubes_from(j["cubes"], 2));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace scl
