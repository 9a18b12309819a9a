#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "scl/invariants.hpp"
#include "scl/presentation.hpp"

using namespace scl;

namespace {

constexpr double kPi = std::numbers::pi;

// Solid angle of the segment pair (Klenin-Langowski), signed so that the
// double sum over two closed polygons divided by 4 pi is the Gauss integral.
double pair_solid_angle(const Point3& a1, const Point3& a2, const Point3& b1, const Point3& b2) {
    Point3 r13 = b1 - a1, r14 = b2 - a1, r23 = b1 - a2, r24 = b2 - a2;
    Point3 n[4] = {cross(r13, r14), cross(r14, r24), cross(r24, r23), cross(r23, r13)};
    for (auto& v : n) {
        double l = norm(v);
        if (l < 1e-300) return 0;
        v = v * (1 / l);
    }
    double omega = 0;
    for (int k = 0; k < 4; ++k) omega += std::asin(std::clamp(dot(n[k], n[(k + 1) % 4]), -1.0, 1.0));
    double s = dot(cross(b2 - b1, a2 - a1), r13);
    return s > 0 ? omega : -omega;
}

double gauss_linking(const Loop& a, const Loop& b) {
    double total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            total += pair_solid_angle(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]);
    return total / (4 * kPi);
}

// A generic rotation so that nothing lines up with the projection direction.
Point3 tilt(const Point3& p) {
    auto rot = [](const Point3& v, double ax, double ay) {
        Point3 w{v.x, v.y * std::cos(ax) - v.z * std::sin(ax), v.y * std::sin(ax) + v.z * std::cos(ax)};
        return Point3{w.x * std::cos(ay) + w.z * std::sin(ay), w.y, -w.x * std::sin(ay) + w.z * std::cos(ay)};
    };
    return rot(p, 0.37, 0.61);
}

Loop circle(const Point3& c, const Point3& e1, const Point3& e2, int n = 48) {
    Loop l;
    for (int k = 0; k < n; ++k) {
        double th = 2 * kPi * k / n;
        l.push_back(tilt(c + e1 * std::cos(th) + e2 * std::sin(th)));
    }
    return l;
}

// Torus knot (p, q) winding around the core circle of radius 2.
Loop torus_curve(int p, int q, double phase, double minor, int n = 360) {
    Loop l;
    for (int k = 0; k < n; ++k) {
        double u = 2 * kPi * k / n;
        double r = 2 + minor * std::cos(q * u + phase);
        l.push_back(tilt({r * std::cos(p * u), r * std::sin(p * u), minor * std::sin(q * u + phase)}));
    }
    return l;
}

}  // namespace

TEST_CASE("Hopf link follows the right-hand rule") {
    // A runs counterclockwise seen from +z; B goes up through A's disk.
    Loop a = circle({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
    Loop b = circle({1, 0, 0}, {1, 0, 0}, {0, 0, -1});
    CHECK(gauss_linking(a, b) == doctest::Approx(1).epsilon(1e-9));
    CHECK(linking_number(a, b) == 1);
    CHECK(linking_number(b, a) == 1);
    CHECK(linking_number(reversed(a), b) == -1);
    CHECK(linking_number(a, reversed(b)) == -1);
}

TEST_CASE("crossing count agrees with the Gauss integral") {
    SUBCASE("separated circles") {
        Loop a = circle({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
        Loop b = circle({5, 0, 0}, {1, 0, 0}, {0, 0, 1});
        CHECK(std::abs(gauss_linking(a, b)) < 1e-9);
        CHECK(linking_number(a, b) == 0);
    }
    SUBCASE("torus links") {
        // Two parallel (p,q) curves on a torus link p*q times.
        for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, -2}, {3, 2}}) {
            Loop a = torus_curve(p, q, 0, 0.5);
            Loop b = torus_curve(p, q, kPi / std::abs(q) / p, 0.5);
            double g = gauss_linking(a, b);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(std::abs(g - std::round(g)) < 1e-6);
            CHECK(linking_number(a, b) == static_cast<int>(std::lround(g)));
        }
    }
    SUBCASE("random polygons around a fixed circle") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> jitter(-0.15, 0.15);
        Loop a = circle({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 24);
        for (int trial = 0; trial < 40; ++trial) {
            int winds = static_cast<int>(trial % 5) - 2;
            Loop b;
            const int n = 120;
            for (int k = 0; k < n; ++k) {
                double u = 2 * kPi * k / n;
                double r = 1 + 0.4 * std::cos(winds * u);
                Point3 p{r * std::cos(u), r * std::sin(u), 0.4 * std::sin(winds * u)};
                b.push_back(tilt(p + Point3{jitter(rng), jitter(rng), jitter(rng)} * 0.2));
            }
            double g = gauss_linking(a, b);
            REQUIRE(std::abs(g - std::round(g)) < 1e-6);
            CHECK(linking_number(a, b) == static_cast<int>(std::lround(g)));
        }
    }
}

TEST_CASE("linking number is stable under generic shears") {
    Loop a = torus_curve(2, 3, 0, 0.5);
    Loop b = torus_curve(2, 3, kPi / 6, 0.5);
    const int lk = linking_number(a, b);
    CHECK(std::abs(lk) == 6);
    CHECK(lk == static_cast<int>(std::lround(gauss_linking(a, b))));
    for (int i = 1; i <= 10; ++i) {
        Shear s = shear_attempt(i);
        CHECK(std::abs(s.a) <= 0.05);
        CHECK(std::abs(s.b) <= 0.05);
        CHECK(linking_number(a, b, s) == lk);
    }
    CHECK(shear_attempt(0).a == 0);
}

TEST_CASE("degenerate projections are retried, intersections rejected") {
    // Both squares lie in the plane y = 0, so every crossing is a touching point.
    Loop flat_a{{-1, 0, -1}, {1, 0, -1}, {1, 0, 1}, {-1, 0, 1}};
    Loop flat_b{{0, 0, 0}, {2, 0, 0}, {2, 0, 2}, {0, 0, 2}};
    CHECK_THROWS_AS(linking_number(flat_a, flat_b), GeometryError);

    // Same diagram as a Hopf link but with a vertex lying exactly over a crossing.
    Loop a{{-1, 0, 0}, {1, 0, 0}, {1, 1, 0}, {-1, 1, 0}};
    Loop b{{0, -1, -1}, {0, 0.5, -1}, {0, 0.5, 1}, {0, -1, 1}};
    CHECK(std::abs(linking_number(a, b)) == 1);
    CHECK(linking_number(a, b) == static_cast<int>(std::lround(gauss_linking(a, b))));
}

TEST_CASE("framing of twists") {
    for (int n = -3; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(framing_number(twist(n)) == n);
        auto t = twist(n).tube();
        double g = gauss_linking(close_below(t.core), close_above(t.pushoff));
        CHECK(g == doctest::Approx(n).epsilon(1e-6));
    }
    CHECK(framing_number(standard_knot()) == 0);
    CHECK(framing_pair(standard_link()) == std::pair{0, 0});
    CHECK(linking_of_strands(standard_link()) == 0);
}

TEST_CASE("polygon gaps") {
    Loop a = circle({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
    Loop hopf = circle({1, 0, 0}, {1, 0, 0}, {0, 0, 1});
    CHECK(loops_apart(a, hopf, 0.5));
    Loop touching = circle({1, 0, 1}, {1, 0, 0}, {0, 0, 1});  // shares the vertex (1, 0, 0)
    CHECK_FALSE(loops_apart(a, touching, 1e-9));
    Loop far = circle({5, 0, 0}, {1, 0, 0}, {0, 1, 0});
    CHECK(loops_apart(a, far, 2.5));
    CHECK_FALSE(loops_apart(a, far, 3.5));
    // stored polylines cannot refine: the resolution stays at the request
    CHECK(invariant_resolution(catalog_link("clasp")) == kChordTolerance);
}

TEST_CASE("closures") {
    Polyline3 c{{-1, 1}, {{-1, 0, 0}, {1, 0, 0}}};
    auto below = close_below(c);
    auto above = close_above(c);
    REQUIRE(below.size() >= 4);
    for (const auto& p : below) CHECK(p.z <= 1e-12);
    for (const auto& p : above) CHECK(p.z >= -1e-12);
    CHECK(std::any_of(below.begin(), below.end(), [](const Point3& p) { return p.z <= -2; }));
    CHECK(std::any_of(above.begin(), above.end(), [](const Point3& p) { return p.z >= 2; }));
    auto r = reversed(below);
    CHECK(r.size() == below.size());
}

TEST_CASE("embedding diagnostics") {
    auto d = diagnostics(standard_link());
    REQUIRE(d.min_separation);
    CHECK(*d.min_separation == doctest::Approx(0.75));
    CHECK(d.certified());

    // Two parallel strands closer than their radii.
    Tube up{{{-1, 1}, {{-1, 0, 0.5}, {1, 0, 0.5}}}, {{-1, 1}, {{-1, 0, 0.625}, {1, 0, 0.625}}}};
    Tube low{{{-1, -0.5, 0.5, 1}, {{-1, 0, -0.5}, {-0.5, 0, -0.5}, {0.5, 0, 0.45}, {1, 0, -0.5}}},
             {{-1, -0.5, 0.5, 1}, {{-1, 0, -0.375}, {-0.5, 0, -0.375}, {0.5, 0, 0.575}, {1, 0, -0.375}}}};
    auto bad = diagnostics(up, low);
    REQUIRE(bad.min_separation);
    CHECK(*bad.min_separation < 0);
    CHECK_FALSE(bad.certified());
}

TEST_CASE("catalog invariants") {
    auto clasp = catalog_link("clasp");
    CHECK(std::abs(linking_of_strands(clasp)) == 1);
    CHECK(framing_pair(clasp) == std::pair{0, 0});
    auto split = catalog_link("split");
    CHECK(linking_of_strands(split) == 0);
    CHECK(framing_pair(split) == std::pair{0, 0});
    for (const char* k : {"trefoil", "figure_eight"}) {
        CAPTURE(k);
        auto f = catalog_knot(k);
        CHECK(framing_number(f) == 0);
        CHECK(diagnostics(f).certified());
    }
    CHECK(diagnostics(clasp).certified());
    CHECK(diagnostics(split).certified());

    // Gauss integral as an independent check of the catalog linking numbers.
    auto closed = [](const FatLink& l) {
        return gauss_linking(close_below(l.tube(Strand::lower).core), close_above(l.tube(Strand::upper).core));
    };
    CHECK(closed(clasp) == doctest::Approx(linking_of_strands(clasp)).epsilon(1e-6));
    CHECK(std::abs(closed(split)) < 1e-6);

    // Reversing one component negates lk.
    Loop lo = close_below(clasp.tube(Strand::lower).core), hi = close_above(clasp.tube(Strand::upper).core);
    CHECK(linking_number(reversed(lo), hi) == -linking_number(lo, hi));
    for (int i = 1; i <= 10; ++i) CHECK(linking_number(lo, hi, shear_attempt(i)) == linking_number(lo, hi));
}

TEST_CASE("self crossings") {
    // A figure-eight curve in the plane y = 0, lifted so that the branch through z > 0 passes in front.
    Loop eight;
    for (int k = 0; k < 64; ++k) {
        double u = 2 * kPi * (k + 0.5) / 64;
        eight.push_back({std::sin(2 * u), -0.3 * std::cos(u), std::sin(u)});
    }
    auto cs = self_crossings(eight, {});
    REQUIRE(cs.size() == 1);
    CHECK(std::abs(cs[0].X) < 1e-9);
    CHECK(std::abs(cs[0].Z) < 1e-9);
    CHECK(self_crossings(close_below(standard_knot().tube().core), {}).empty());

    auto tre = close_below(catalog_knot("trefoil").tube().core);
    auto s = generic_shear({tre});
    CHECK(self_crossings(tre, s).size() >= 3);
    auto clasp = catalog_link("clasp");
    std::vector<Loop> loops{close_above(clasp.tube(Strand::upper).core), close_below(clasp.tube(Strand::lower).core)};
    auto g = generic_shear(loops);
    int sum = 0;
    for (const auto& c : crossings(loops[1], loops[0], g)) sum += c.sign;
    CHECK(sum / 2 == linking_of_strands(clasp));
}
