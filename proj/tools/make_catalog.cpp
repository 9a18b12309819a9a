// Writes the catalog presentations (trefoil, figure_eight, clasp, split) into a directory.
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

#include "scl/invariants.hpp"
#include "scl/presentation.hpp"

using namespace scl;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScale = 0.18;
constexpr int kBodySamples = 240;
constexpr double kBodyRadius = 0.03;

Point3 normalized(const Point3& p) { return p * (1 / norm(p)); }

// Rodrigues rotation of v about the unit axis k.
Point3 rotate(const Point3& v, const Point3& k, double angle) {
    return v * std::cos(angle) + cross(k, v) * std::sin(angle) + k * (dot(k, v) * (1 - std::cos(angle)));
}

// Rotation taking unit a to unit b, applied to v.
Point3 transport(const Point3& v, const Point3& a, const Point3& b) {
    Point3 axis = cross(a, b);
    double s = norm(axis), c = dot(a, b);
    if (s < 1e-15) return v;
    return rotate(v, axis * (1 / s), std::atan2(s, c));
}

std::vector<double> arc_params(const std::vector<Point3>& c) {
    std::vector<double> s{0};
    for (std::size_t i = 1; i < c.size(); ++i) s.push_back(s.back() + dist(c[i], c[i - 1]));
    for (auto& v : s) v = -1 + 2 * v / s.back();
    s.front() = -1;
    s.back() = 1;
    return s;
}

// Parallel-transported unit normals at the vertices, starting from start_n at vertex 0.
std::vector<Point3> transported_normals(const std::vector<Point3>& c, const Point3& start_n) {
    const std::size_t n = c.size();
    std::vector<Point3> seg_t, seg_n;
    for (std::size_t i = 0; i + 1 < n; ++i) seg_t.push_back(normalized(c[i + 1] - c[i]));
    seg_n.push_back(start_n);
    for (std::size_t i = 1; i < seg_t.size(); ++i) seg_n.push_back(transport(seg_n.back(), seg_t[i - 1], seg_t[i]));
    std::vector<Point3> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            out.push_back(seg_n.front());
            continue;
        }
        if (i + 1 == n) {
            out.push_back(seg_n.back());
            continue;
        }
        Point3 tan = normalized(c[i + 1] - c[i - 1]);
        Point3 v = transport(seg_n[i - 1], seg_t[i - 1], tan);
        out.push_back(normalized(v - tan * dot(v, tan)));
    }
    return out;
}

Point3 vertex_tangent(const std::vector<Point3>& c, std::size_t i) {
    if (i == 0 || i + 1 == c.size()) return {1, 0, 0};
    return normalized(c[i + 1] - c[i - 1]);
}

// Tube whose pushoff follows the transported normal, corrected to close up and to have framing zero.
template <class Validate>
Tube framed_tube(const std::vector<Point3>& core, const std::vector<double>& rho, const Point3& end_n, Validate&& framing) {
    auto t = arc_params(core);
    auto normals = transported_normals(core, end_n);
    const Point3 last_t = vertex_tangent(core, core.size() - 1);
    Point3 got = normals.back();
    double mismatch = std::atan2(dot(cross(got, end_n), last_t), dot(got, end_n));
    for (int k : {0, -1, 1, -2, 2, -3, 3, -4, 4, -5, 5, -6, 6}) {
        double total = mismatch + 2 * kPi * k;
        Tube tube;
        tube.core.t = t;
        tube.core.p = core;
        tube.pushoff.t = t;
        for (std::size_t i = 0; i < core.size(); ++i) {
            double w = (t[i] + 1) / 2;
            Point3 nn = rotate(normals[i], vertex_tangent(core, i), total * w);
            tube.pushoff.p.push_back(core[i] + nn * rho[i]);
        }
        tube.pushoff.p.front() = core.front() + end_n * rho.front();
        tube.pushoff.p.back() = core.back() + end_n * rho.back();
        if (framing(tube) == 0) return tube;
    }
    throw std::runtime_error("no framing correction reaches zero");
}

// Core polyline of the long knot: the closed curve opened at its bottom and joined to the x-axis.
std::vector<Point3> knot_core(const std::function<Point3(double)>& curve) {
    std::vector<Point3> body;
    for (int k = 0; k < kBodySamples; ++k) {
        Point3 q = curve(2 * kPi * k / kBodySamples);
        body.push_back(Point3{q.x, q.z, q.y} * kScale);
    }
    std::size_t lo = 0;
    for (std::size_t k = 1; k < body.size(); ++k)
        if (body[k].z < body[lo].z) lo = k;
    // open the loop at its lowest vertex so that the removed edge runs in the -x direction
    const std::size_t n = body.size();
    std::size_t nxt = (lo + 1) % n, prv = (lo + n - 1) % n;
    std::vector<Point3> path;
    if (body[nxt].x < body[lo].x) {
        for (std::size_t k = 0; k < n; ++k) path.push_back(body[(nxt + k) % n]);
    } else {
        for (std::size_t k = 0; k < n; ++k) path.push_back(body[(prv + n - k) % n]);
    }
    // widen the cut so the two legs down to the closing arc stay well apart
    while (dist(path.front(), path.back()) < 0.2) {
        path.erase(path.begin());
        path.pop_back();
    }
    const Point3 bs = path.front(), be = path.back();
    if (!(bs.x < be.x)) throw std::runtime_error("cut does not run in the -x direction");

    std::vector<Point3> core{{-1, 0, 0}, {-0.99, 0, 0}, {-0.8, 0, 0}, {-0.8, 0, -0.7}, {bs.x, bs.y, -0.7}};
    core.insert(core.end(), path.begin(), path.end());
    for (Point3 p : {Point3{be.x, be.y, -0.7}, Point3{0.8, 0, -0.7}, Point3{0.8, 0, 0}, Point3{0.99, 0, 0}, Point3{1, 0, 0}})
        core.push_back(p);
    return core;
}

Tube long_knot(const std::function<Point3(double)>& curve) {
    auto core = knot_core(curve);
    std::vector<double> rho(core.size(), kBodyRadius);
    rho.front() = rho.back() = 1;
    return framed_tube(core, rho, {0, 0, 1}, [](const Tube& t) { return framing_number(FatKnot::from_tube(t)); });
}

Tube straight_strand(double zc) {
    Tube t;
    t.core.t = t.pushoff.t = {-1, 1};
    t.core.p = {{-1, 0, zc}, {1, 0, zc}};
    t.pushoff.p = {{-1, 0, zc + 0.125}, {1, 0, zc + 0.125}};
    return t;
}

// Zero-framed knot shrunk uniformly into the upper strand; the lower strand is straight.
// Uniform scaling keeps the tube round, unlike the image of the knot under the strand inclusion.
FatLink split_link(const std::function<Point3(double)>& curve) {
    constexpr double s = 0.25;
    std::vector<Point3> core{{-1, 0, 0.5}};
    for (const auto& p : knot_core(curve)) core.push_back({p.x * s, p.y * s, 0.5 + p.z * s});
    core.push_back({1, 0, 0.5});
    std::vector<double> rho(core.size(), kBodyRadius * s);
    rho.front() = rho.back() = 0.125;
    auto upper = framed_tube(core, rho, {0, 0, 1}, [](const Tube& t) {
        validate_link_tube(Strand::upper, t);
        return linking_number(close_below(t.core), close_above(t.pushoff));
    });
    return FatLink::from_tubes(upper, straight_strand(-0.5));
}

Point3 trefoil(double u) { return {std::sin(u) + 2 * std::sin(2 * u), std::cos(u) - 2 * std::cos(2 * u), -std::sin(3 * u)}; }

Point3 figure_eight(double u) {
    double r = 2 + std::cos(2 * u);
    return {r * std::cos(3 * u), r * std::sin(3 * u), std::sin(4 * u)};
}

// Full twist of the two strands about the x-axis over [-0.8, 0.8].
FatLink clasp() {
    constexpr int kSegs = 96;
    Tube strands[2];
    for (int s = 0; s < 2; ++s) {
        const double phase = s == 0 ? 0 : kPi;
        std::vector<Point3> core;
        core.push_back({-1, 0, s == 0 ? 0.5 : -0.5});
        for (int i = 0; i <= kSegs; ++i) {
            double t = -0.8 + 1.6 * i / kSegs;
            double th = 2 * kPi * i / kSegs + phase;
            core.push_back({t, -0.5 * std::sin(th), 0.5 * std::cos(th)});
        }
        core.push_back({1, 0, s == 0 ? 0.5 : -0.5});
        std::vector<double> rho(core.size(), 0.125);
        Strand which = s == 0 ? Strand::upper : Strand::lower;
        strands[s] = framed_tube(core, rho, {0, 0, 1}, [&](const Tube& t) {
            validate_link_tube(which, t);
            return linking_number(close_below(t.core), close_above(t.pushoff));
        });
    }
    return FatLink::from_tubes(strands[0], strands[1]);
}

void write(const std::string& dir, const std::string& name, const nlohmann::json& j) {
    std::ofstream out(dir + "/" + name + ".json", std::ios::binary);
    out << j.dump() << "\n";
    if (!out) throw std::runtime_error("cannot write " + name);
    std::cout << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_catalog OUTPUT_DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    try {
        auto t = FatKnot::from_tube(long_knot(trefoil));
        auto f8 = FatKnot::from_tube(long_knot(figure_eight));
        write(dir, "trefoil", to_json(t));
        write(dir, "figure_eight", to_json(f8));
        write(dir, "clasp", to_json(clasp()));
        write(dir, "split", to_json(split_link(trefoil)));
    } catch (const std::exception& e) {
        std::cerr << "make_catalog: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
