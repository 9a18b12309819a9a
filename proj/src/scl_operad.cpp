#include "scl/scl_operad.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace scl {

const char* to_string(Color c) {
    switch (c) {
        case Color::o: return "o";
        case Color::up: return "up";
        case Color::down: return "down";
        case Color::updown: return "updown";
    }
    return "?";
}

Color color_from_string(const std::string& s) {
    if (s == "o") return Color::o;
    if (s == "up") return Color::up;
    if (s == "down") return Color::down;
    if (s == "updown" || s == "both") return Color::updown;
    throw std::invalid_argument("unknown color '" + s + "'");
}

std::size_t color_count(const std::vector<Color>& t, Color c) {
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), c));
}

std::vector<Color> splice_colors(const std::vector<Color>& t, std::size_t i, const std::vector<Color>& u) {
    if (i >= t.size()) throw std::out_of_range("color splice index out of range");
    std::vector<Color> out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
    return out;
}

std::string SclReport::summary() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < violations.size(); ++k) {
        if (k) os << "; ";
        os << violations[k].clause;
        if (!violations[k].cubes.empty()) {
            os << " (cubes";
            for (auto c : violations[k].cubes) os << ' ' << c + 1;
            os << ')';
        }
    }
    return os.str();
}

SclReport scl_validate(const std::vector<Color>& inputs, Color output, const std::vector<LittleCube>& cubes) {
    SclReport r;
    auto add = [&](std::string clause, std::vector<std::size_t> idx) {
        r.violations.push_back({std::move(clause), std::move(idx)});
    };
    if (inputs.size() != cubes.size()) {
        add("input colors and cubes differ in number", {});
        return r;
    }
    for (std::size_t i = 0; i < cubes.size(); ++i)
        if (cubes[i].dim() != 2) add("cube is not 2-dimensional", {i});
    if (!r.ok()) return r;

    const std::size_t k = cubes.size();
    if (output != Color::o) {
        for (std::size_t i = 0; i < k; ++i)
            if (inputs[i] != output) add("closed output requires monochromatic inputs", {i});
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (!almost_disjoint(cubes[i], cubes[j])) add("cubes must be pairwise almost disjoint", {i, j});
        return r;
    }
    for (std::size_t i = 0; i < k; ++i)
        if (inputs[i] == Color::o && !meets_lower_face(cubes[i])) add("o-cube must meet the lower face", {i});
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool involves_o = inputs[i] == Color::o || inputs[j] == Color::o;
            bool same = inputs[i] == inputs[j];
            if ((involves_o || same) && !almost_disjoint(cubes[i], cubes[j]))
                add(involves_o ? "o-cube must be almost disjoint from every other cube"
                               : "same-colored cubes must be pairwise almost disjoint",
                    {i, j});
        }
    return r;
}

namespace {

CubeConfig checked_config(const std::vector<Color>& inputs, Color output, std::vector<LittleCube> cubes) {
    auto report = scl_validate(inputs, output, cubes);
    if (!report.ok()) throw ValidationError("SCL element: " + report.summary());
    return CubeConfig(2, std::move(cubes), output == Color::o ? CubeMode::overlapping : CubeMode::disjoint);
}

}  // namespace

SclElement::SclElement(std::vector<Color> inputs, Color output, std::vector<LittleCube> cubes)
    : inputs_(std::move(inputs)), output_(output), config_(checked_config(inputs_, output_, std::move(cubes))) {}

SclElement SclElement::identity(Color c) { return SclElement({c}, c, {LittleCube::identity(2)}); }

SclElement scl_compose_at(const SclElement& a, std::size_t i, const SclElement& b) {
    if (i >= a.arity()) throw std::out_of_range("SCL composition index out of range");
    if (b.output() != a.inputs()[i])
        throw std::invalid_argument(std::string("color mismatch: input ") + std::to_string(i + 1) + " is " +
                                    to_string(a.inputs()[i]) + " but the inserted output is " +
                                    to_string(b.output()));
    auto cfg = cube_compose_at(a.config().with_mode(CubeMode::overlapping), i,
                               b.config().with_mode(CubeMode::overlapping));
    auto colors = splice_colors(a.inputs(), i, b.inputs());
    auto report = scl_validate(colors, a.output(), cfg.cubes());
    if (!report.ok()) throw std::logic_error("SCL composite failed validation: " + report.summary());
    return SclElement(std::move(colors), a.output(), cfg.cubes());
}

SclElement scl_sigma(const SclElement& a, const Perm& sigma) {
    auto cfg = cube_sigma(a.config(), sigma);
    std::vector<Color> colors;
    for (auto s : sigma) colors.push_back(a.inputs()[s]);
    return SclElement(std::move(colors), a.output(), cfg.cubes());
}

bool ColorSort::sorts(const std::vector<Color>& t) const {
    std::vector<int> hit(t.size(), 0);
    for (auto c : kAllColors) {
        if (of(c).size() != color_count(t, c)) return false;
        for (auto i : of(c)) {
            if (i >= t.size() || t[i] != c) return false;
            ++hit[i];
        }
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

ColorSort color_sort(const std::vector<Color>& t) {
    ColorSort s;
    for (std::size_t i = 0; i < t.size(); ++i) s.of(t[i]).push_back(i);
    return s;
}

CubeConfig restrict_config(const SclElement& e, Color c, const ColorSort& sort) {
    std::vector<LittleCube> cubes;
    for (auto i : sort.of(c)) cubes.push_back(e.config().cube(i));
    return CubeConfig(2, std::move(cubes), c == Color::o ? CubeMode::lowerface : CubeMode::disjoint);
}

Pi0Class pi0_class(const CubeConfig& l) {
    if (l.mode() == CubeMode::overlapping) (void)l.with_mode(CubeMode::disjoint);
    if (l.dim() >= 2) return Pi0Class::point();
    std::vector<std::size_t> order(l.arity());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return l.cube(a).factor(0).lo() < l.cube(b).factor(0).lo(); });
    return Pi0Class::perm(std::move(order));
}

Pi0Class pi0_class_scl(const SclElement& e) {
    if (e.output() != Color::o) return Pi0Class::point();
    auto sort = color_sort(e.inputs());
    return pi0_class(projection_pi(restrict_config(e, Color::o, sort)).with_mode(CubeMode::disjoint));
}

}  // namespace scl
