#include "scl/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "scl/invariants.hpp"

namespace scl {

namespace {

constexpr double kSize = 400;
constexpr double kMargin = 40;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

const char* fill_of(Color c) {
    switch (c) {
        case Color::o: return "#cfe3f7";
        case Color::up: return "#f7d9cf";
        case Color::down: return "#d6efcf";
        case Color::updown: return "#e6daf4";
    }
    return "#eeeeee";
}

const char* glyph(Color c) {
    switch (c) {
        case Color::o: return "o";
        case Color::up: return "↑";
        case Color::down: return "↓";
        case Color::updown: return "↕";
    }
    return "?";
}

class Svg {
public:
    Svg() {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize + 2 * kMargin) << "\" height=\""
             << num(kSize + 2 * kMargin) << "\" viewBox=\"0 0 " << num(kSize + 2 * kMargin) << " "
             << num(kSize + 2 * kMargin) << "\" font-family=\"serif\">\n";
    }
    std::ostringstream& raw() { return out_; }
    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

    // Unit-square coordinates [-1, 1]^2 to pixels, y up.
    static double px(double x) { return kMargin + (x + 1) / 2 * kSize; }
    static double py(double y) { return kMargin + (1 - y) / 2 * kSize; }

    void frame(const std::string& id) {
        out_ << "  <rect id=\"" << id << "\" x=\"" << num(px(-1)) << "\" y=\"" << num(py(1)) << "\" width=\"" << num(kSize)
             << "\" height=\"" << num(kSize) << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    }

    void box(std::size_t i, double x0, double x1, double y0, double y1, const char* fill, const std::string& sup) {
        const auto id = "cube" + std::to_string(i + 1);
        out_ << "  <g id=\"" << id << "\">\n"
             << "    <rect x=\"" << num(px(x0)) << "\" y=\"" << num(py(y1)) << "\" width=\"" << num(px(x1) - px(x0))
             << "\" height=\"" << num(py(y0) - py(y1)) << "\" fill=\"" << fill
             << "\" fill-opacity=\"0.7\" stroke=\"#333\" stroke-width=\"1\"/>\n"
             << "    <text x=\"" << num((px(x0) + px(x1)) / 2) << "\" y=\"" << num((py(y0) + py(y1)) / 2 + 5)
             << "\" text-anchor=\"middle\" font-size=\"15\">" << i + 1;
        if (!sup.empty()) out_ << "<tspan baseline-shift=\"super\" font-size=\"11\">" << sup << "</tspan>";
        out_ << "</text>\n  </g>\n";
    }

private:
    std::ostringstream out_;
};

}  // namespace

std::string render_cubes(const CubeConfig& l) {
    Svg svg;
    svg.frame("frame");
    const std::size_t k = l.arity();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& x = l.cube(i).factor(0);
        double x0 = x.lo().to_double(), x1 = x.hi().to_double();
        if (l.dim() >= 2) {
            const auto& y = l.cube(i).factor(1);
            svg.box(i, x0, x1, y.lo().to_double(), y.hi().to_double(), "#eeeeee", "");
        } else {
            // one row per interval so overlapping intervals stay visible
            double h = 2.0 / static_cast<double>(k);
            double y1 = 1 - h * static_cast<double>(i);
            svg.box(i, x0, x1, y1 - 0.8 * h, y1 - 0.2 * h, "#eeeeee", "");
        }
    }
    return svg.finish();
}

std::string render_scl(const SclElement& e) {
    Svg svg;
    svg.frame("frame");
    svg.raw() << "  <text id=\"output\" x=\"" << num(Svg::px(1) + 6) << "\" y=\"" << num(Svg::py(-1) + 16)
              << "\" font-size=\"15\"><tspan baseline-shift=\"sub\">" << glyph(e.output()) << "</tspan></text>\n";
    for (std::size_t i = 0; i < e.arity(); ++i) {
        const auto& c = e.config().cube(i);
        svg.box(i, c.factor(0).lo().to_double(), c.factor(0).hi().to_double(), c.factor(1).lo().to_double(),
                c.factor(1).hi().to_double(), fill_of(e.inputs()[i]), glyph(e.inputs()[i]));
    }
    return svg.finish();
}

namespace {

struct Strand2 {
    Loop loop;
    std::string id;
    const char* stroke;
};

// Diagram coordinates span [-3.5, 3.5] in both directions.
double dx(double X) { return kMargin + (X + 3.5) / 7 * kSize; }
double dz(double Z) { return kMargin + (3.5 - Z) / 7 * kSize; }

}  // namespace

std::string render_diagram(const Presentation& p, double tol) {
    std::vector<Strand2> strands;
    if (auto* k = std::get_if<FatKnot>(&p)) {
        strands.push_back({close_below(k->tube(tol).core), "knot", "#000"});
    } else {
        const auto& l = std::get<FatLink>(p);
        strands.push_back({close_above(l.tube(Strand::upper, tol).core), "upper", "#1f4e9c"});
        strands.push_back({close_below(l.tube(Strand::lower, tol).core), "lower", "#9c1f1f"});
    }
    std::vector<Loop> loops;
    for (const auto& s : strands) loops.push_back(s.loop);
    const Shear sh = generic_shear(loops);
    auto proj = [&](const Point3& q) { return std::pair{q.x - sh.a * q.y, q.z - sh.b * q.y}; };

    // crossings as (strand, segment) pairs for the over and under pieces
    struct Cross {
        double X, Z;
        std::size_t over_strand, over_seg, under_strand, under_seg;
    };
    std::vector<Cross> cs;
    for (std::size_t a = 0; a < strands.size(); ++a) {
        for (const auto& c : self_crossings(loops[a], sh))
            cs.push_back(c.a_over ? Cross{c.X, c.Z, a, c.seg_a, a, c.seg_b} : Cross{c.X, c.Z, a, c.seg_b, a, c.seg_a});
        for (std::size_t b = a + 1; b < strands.size(); ++b)
            for (const auto& c : crossings(loops[a], loops[b], sh))
                cs.push_back(c.a_over ? Cross{c.X, c.Z, a, c.seg_a, b, c.seg_b} : Cross{c.X, c.Z, b, c.seg_b, a, c.seg_a});
    }

    Svg svg;
    auto& o = svg.raw();
    o << "  <text id=\"shear\" x=\"" << num(kMargin) << "\" y=\"" << num(kMargin - 14) << "\" font-size=\"12\">shear a="
      << num(sh.a) << " b=" << num(sh.b) << ", crossings " << cs.size() << "</text>\n";
    for (const auto& s : strands) {
        o << "  <polygon id=\"" << s.id << "\" fill=\"none\" stroke=\"" << s.stroke
          << "\" stroke-width=\"1.6\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t i = 0; i < s.loop.size(); ++i) {
            auto [X, Z] = proj(s.loop[i]);
            o << (i ? " " : "") << num(dx(X)) << "," << num(dz(Z));
        }
        o << "\"/>\n";
    }
    // a white break across the under-strand, then the over-strand redrawn on top
    auto piece = [&](std::size_t strand, std::size_t seg, double X, double Z, double half) {
        const auto& l = loops[strand];
        auto [x0, z0] = proj(l[seg]);
        auto [x1, z1] = proj(l[(seg + 1) % l.size()]);
        double len = std::hypot(dx(x1) - dx(x0), dz(z1) - dz(z0));
        double ux = (dx(x1) - dx(x0)) / len, uz = (dz(z1) - dz(z0)) / len;
        return std::array<double, 4>{dx(X) - ux * half, dz(Z) - uz * half, dx(X) + ux * half, dz(Z) + uz * half};
    };
    std::size_t n = 0;
    for (const auto& c : cs) {
        auto u = piece(c.under_strand, c.under_seg, c.X, c.Z, 6);
        auto v = piece(c.over_strand, c.over_seg, c.X, c.Z, 8);
        o << "  <g id=\"crossing" << ++n << "\">\n"
          << "    <line x1=\"" << num(u[0]) << "\" y1=\"" << num(u[1]) << "\" x2=\"" << num(u[2]) << "\" y2=\"" << num(u[3])
          << "\" stroke=\"#fff\" stroke-width=\"6\"/>\n"
          << "    <line x1=\"" << num(v[0]) << "\" y1=\"" << num(v[1]) << "\" x2=\"" << num(v[2]) << "\" y2=\"" << num(v[3])
          << "\" stroke=\"" << strands[c.over_strand].stroke << "\" stroke-width=\"1.6\"/>\n"
          << "  </g>\n";
    }
    return svg.finish();
}

}  // namespace scl
