#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "scl/actions.hpp"
#include "scl/config_io.hpp"
#include "scl/invariants.hpp"
#include "scl/presentation.hpp"

using namespace scl;
using namespace scl::test;

namespace {

constexpr double kTol = 1e-6;

double deviation(const Presentation& a, const Presentation& b) {
    if (a.index() != b.index()) return 1e9;
    if (auto* k = std::get_if<FatKnot>(&a)) return sample_deviation(*k, std::get<FatKnot>(b));
    return sample_deviation(std::get<FatLink>(a), std::get<FatLink>(b));
}

// Inputs permuted so that input j lands in the cube it occupied before the right action by tau.
template <class T>
std::vector<T> pushed(const std::vector<T>& in, const Perm& tau) {
    auto inv = inverse(tau);
    std::vector<T> out;
    for (std::size_t i = 0; i < in.size(); ++i) out.push_back(in[inv[i]]);
    return out;
}

CubeConfig c2(std::vector<LittleCube> cubes) { return CubeConfig(2, std::move(cubes), CubeMode::disjoint); }
CubeConfig c1(std::vector<LittleCube> cubes) { return CubeConfig(1, std::move(cubes), CubeMode::disjoint); }

FatKnot trefoil() { return catalog_knot("trefoil"); }
FatKnot fig8() { return catalog_knot("figure_eight"); }

}  // namespace

TEST_CASE("standard objects") {
    for (double t : {-1.5, -0.3, 0.0, 0.9, 2.0})
        for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, -0.5}, {0.0, 1.0}}) {
            Point3 p{t, a, b};
            CHECK(dist(standard_knot()(p), p) < 1e-12);
            for (auto s : kStrands) CHECK(dist(standard_link()(s, p), iota(s, p)) < 1e-12);
        }
    CHECK(iota(Strand::upper, {0.25, 1, 1}) == Point3{0.25, 0.125, 0.625});
    CHECK(iota(Strand::lower, {0.25, 0, -1}) == Point3{0.25, 0, -0.625});
}

TEST_CASE("tube validation") {
    auto good = twist(1).tube();
    CHECK_NOTHROW(FatKnot::from_tube(good));
    auto bad_end = good;
    bad_end.core.p.back().y = 0.1;
    CHECK_THROWS_AS(FatKnot::from_tube(bad_end), GeometryError);
    auto outside = good;
    outside.core.p[3] = {outside.core.p[3].x, 0, 1.2};
    CHECK_THROWS_AS(FatKnot::from_tube(outside), GeometryError);
    auto collapsed = good;
    collapsed.pushoff.p[5] = collapsed.core.p[5];
    CHECK_THROWS_AS(FatKnot::from_tube(collapsed), GeometryError);
    auto grid = good;
    grid.pushoff.t[4] += 1e-3;
    CHECK_THROWS_AS(FatKnot::from_tube(grid), GeometryError);
    CHECK_THROWS_AS(FatLink::from_tubes(good, good), GeometryError);
}

TEST_CASE("materialized tubes reproduce the map") {
    auto k = compose(cube1_conjugate(AffineInc(q(1, 2), q(-1, 2)), trefoil()), twist(2));
    auto t = k.tube();
    auto leaf = FatKnot::from_tube(t);
    CHECK(framing_number(leaf) == framing_number(k));
    for (std::size_t i = 0; i < t.core.size(); ++i) CHECK(dist(t.core.p[i], k({t.core.t[i], 0, 0})) < 1e-12);
    // Chord tolerance bounds the error of the piecewise-linear core.
    double worst = 0;
    for (int i = 0; i <= 2000; ++i) {
        double s = -1 + 2.0 * i / 2000;
        worst = std::max(worst, dist(t.core.at(s), k({s, 0, 0})));
    }
    CHECK(worst <= 2 * kChordTolerance);
}

TEST_CASE("x-conjugation is a group action and is supported in the cube") {
    AffineInc L(q(1, 2), q(1, 3)), M(q(2, 3), q(-1, 4));
    auto f = trefoil();
    CHECK(sample_deviation(cube1_conjugate(L, cube1_conjugate(M, f)), cube1_conjugate(affine_compose(L, M), f)) <= 1e-9);
    CHECK(sample_deviation(cube1_conjugate(AffineInc(), f), f) <= 1e-12);
    auto g = cube1_conjugate(L, f);
    for (double t : {-1.0, -0.5, -0.17, 0.84, 0.95})
        for (double z : {0.0, 0.5, -1.0}) CHECK(g({t, 0.2, z}) == Point3{t, 0.2, z});
    CHECK(framing_number(g) == framing_number(f));

    auto l = catalog_link("clasp");
    auto lc = cube1_conjugate(L, l);
    CHECK(sample_deviation(cube1_conjugate(L, cube1_conjugate(M, l)), cube1_conjugate(affine_compose(L, M), l)) <= 1e-9);
    for (auto s : kStrands) CHECK(lc(s, {-0.5, 0.3, 0.1}) == iota(s, {-0.5, 0.3, 0.1}));
    CHECK(linking_of_strands(lc) == linking_of_strands(l));
}

TEST_CASE("composition of knots") {
    auto f = trefoil();
    CHECK(sample_deviation(compose(standard_knot(), f), f) <= 1e-12);
    CHECK(sample_deviation(compose(f, standard_knot()), f) <= 1e-12);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) CHECK(framing_number(compose(twist(a), twist(b))) == a + b);
    // Disjointly supported factors commute.
    auto left = cube1_conjugate(AffineInc(q(1, 2), q(-1, 2)), f);
    auto right = cube1_conjugate(AffineInc(q(1, 2), q(1, 2)), fig8());
    CHECK(sample_deviation(compose(left, right), compose(right, left)) <= 1e-12);
}

TEST_CASE("kappa") {
    auto side = c2({rect(q(-1), q(0), q(-1), q(1)), rect(q(0), q(1), q(-1), q(1))});
    auto stack = c2({rect(q(-1), q(1), q(0), q(1)), rect(q(-1), q(1), q(-1), q(0))});

    SUBCASE("arity 0 and unit") {
        CHECK(sample_deviation(kappa_act(CubeConfig::empty(2), {}), standard_knot()) == 0);
        CHECK(sample_deviation(kappa_act(CubeConfig::unit(2), {trefoil()}), trefoil()) <= 1e-12);
    }
    SUBCASE("side by side framings add") {
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) CHECK(framing_number(kappa_act(side, {twist(a), twist(b)})) == a + b);
        auto k = kappa_act(side, {trefoil(), fig8()});
        CHECK(framing_number(k) == 0);
    }
    SUBCASE("stacked cubes compose lowest outermost") {
        auto want = compose(fig8(), trefoil());
        CHECK(sample_deviation(kappa_act(stack, {trefoil(), fig8()}), want) <= 1e-12);
        CHECK(sample_deviation(kappa_act(stack, {trefoil(), fig8()}, OrderDirection::reverse), compose(trefoil(), fig8())) <=
              1e-12);
    }
    SUBCASE("every linear extension gives the same knot") {
        auto l = c2({rect(q(-1), q(-1, 2), q(-1), q(0)), rect(q(-1, 2), q(1, 2), q(-1), q(1, 2)),
                     rect(q(1, 2), q(1), q(-1, 2), q(1)), rect(q(-1), q(0), q(1, 2), q(1))});
        std::vector<FatKnot> knots{trefoil(), fig8(), twist(1), trefoil()};
        for (auto dir : {OrderDirection::standard, OrderDirection::reverse}) {
            auto perms = ordering_permutations(l, dir);
            REQUIRE(perms.size() >= 2);
            auto ref = kappa_act(l, knots, dir);
            for (const auto& sigma : perms) {
                auto k = kappa_act(l, knots, sigma, dir);
                CHECK(sample_deviation(k, ref) <= kTol);
                CHECK(framing_number(k) == framing_number(ref));
            }
        }
        CHECK_THROWS_AS(kappa_act(stack, {trefoil(), fig8()}, Perm{0, 1}), ValidationError);
    }
    SUBCASE("equivariance") {
        auto l = c2({rect(q(-1), q(-1, 2), q(-1), q(1)), rect(q(-1, 2), q(1), q(0), q(1)),
                     rect(q(-1, 2), q(1), q(-1), q(0))});
        std::vector<FatKnot> knots{trefoil(), fig8(), twist(-1)};
        for (const auto& tau : all_perms(3)) {
            auto lhs = kappa_act(cube_sigma(l, tau), knots);
            auto rhs = kappa_act(l, pushed(knots, tau));
            CHECK(sample_deviation(lhs, rhs) <= kTol);
            CHECK(framing_number(lhs) == framing_number(rhs));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(kappa_act(side, {trefoil()}), ValidationError);
        CHECK_THROWS_AS(kappa_act(c1({interval(q(-1), q(1))}), {trefoil()}), ValidationError);
    }
}

TEST_CASE("lambda") {
    auto clasp = catalog_link("clasp");
    auto split = catalog_link("split");
    auto two = c1({interval(q(-1), q(0)), interval(q(0), q(1))});

    CHECK(sample_deviation(lambda_act(CubeConfig::empty(1), {}), standard_link()) == 0);
    CHECK(sample_deviation(lambda_act(CubeConfig::unit(1), {clasp}), clasp) <= 1e-12);

    auto cc = lambda_act(two, {clasp, clasp});
    CHECK(linking_of_strands(cc) == 2 * linking_of_strands(clasp));
    CHECK(framing_pair(cc) == std::pair{0, 0});
    CHECK(diagnostics(cc).certified());

    auto tw = lambda_act(two, {phi_hat(Color::up, twist(2)), phi_hat(Color::down, twist(-1))});
    CHECK(framing_pair(tw) == std::pair{2, -1});
    CHECK(linking_of_strands(tw) == 0);

    auto three = c1({interval(q(-1), q(-1, 3)), interval(q(-1, 3), q(1, 3)), interval(q(1, 3), q(1))});
    std::vector<FatLink> links{clasp, split, phi_hat(Color::updown, twist(1))};
    for (const auto& tau : all_perms(3)) {
        auto lhs = lambda_act(cube_sigma(three, tau), links);
        auto rhs = lambda_act(three, pushed(links, tau));
        CHECK(sample_deviation(lhs, rhs) <= kTol);
        CHECK(linking_of_strands(lhs) == linking_of_strands(rhs));
    }
    CHECK_THROWS_AS(lambda_act(two, {clasp}), ValidationError);
}

TEST_CASE("phi_hat") {
    for (int n = -2; n <= 2; ++n) {
        CAPTURE(n);
        CHECK(framing_pair(phi_hat(Color::up, twist(n))) == std::pair{n, 0});
        CHECK(framing_pair(phi_hat(Color::down, twist(n))) == std::pair{0, n});
        // both strands ride along a twisted band: a double cable
        auto cable = phi_hat(Color::updown, twist(n));
        CHECK(framing_pair(cable) == std::pair{n, n});
        CHECK(linking_of_strands(cable) == n);
    }
    CHECK(linking_of_strands(phi_hat(Color::up, trefoil())) == 0);
    CHECK(diagnostics(phi_hat(Color::down, fig8())).min_separation.value() > 0);
    CHECK_THROWS_AS(phi_hat(Color::o, trefoil()), std::invalid_argument);
}

TEST_CASE("mu") {
    auto clasp = catalog_link("clasp");
    auto split = catalog_link("split");

    SUBCASE("identity cube of a closed color gives phi_hat") {
        for (auto s : kClosedColors) {
            SclElement e({s}, Color::o, {LittleCube::identity(2)});
            for (const auto& f : {trefoil(), fig8(), twist(2)}) {
                auto got = std::get<FatLink>(mu_act(e, {f}));
                auto want = phi_hat(s, f);
                CHECK(sample_deviation(got, want) <= kTol);
                CHECK(framing_pair(got) == framing_pair(want));
                CHECK(linking_of_strands(got) == linking_of_strands(want));
            }
        }
    }
    SUBCASE("closed outputs act by kappa") {
        SclElement e({Color::up, Color::up}, Color::up, {rect(q(-1), q(0), q(-1), q(1)), rect(q(0), q(1), q(-1), q(1))});
        auto got = std::get<FatKnot>(mu_act(e, {trefoil(), fig8()}));
        CHECK(sample_deviation(got, kappa_act(e.config(), {trefoil(), fig8()})) <= 1e-12);
        SclElement both({Color::updown, Color::updown}, Color::updown,
                        {rect(q(-1), q(1), q(0), q(1)), rect(q(-1), q(1), q(-1), q(0))});
        auto gb = std::get<FatKnot>(mu_act(both, {trefoil(), fig8()}));
        CHECK(sample_deviation(gb, compose(trefoil(), fig8())) <= 1e-12);
        CHECK(sample_deviation(std::get<FatKnot>(mu_act(SclElement::identity(Color::down), {fig8()})), fig8()) <= 1e-12);
    }
    SUBCASE("o inputs only act by lambda") {
        SclElement e({Color::o, Color::o}, Color::o, {rect(q(-1), q(0), q(-1), q(1, 2)), rect(q(0), q(1), q(-1), q(0))});
        auto got = std::get<FatLink>(mu_act(e, {clasp, split}));
        auto want = lambda_act(c1({interval(q(-1), q(0)), interval(q(0), q(1))}), {clasp, split});
        CHECK(sample_deviation(got, want) <= 1e-12);
    }
    SUBCASE("figure element") {
        auto e = figure_outer();
        std::vector<Presentation> in{trefoil(), clasp, fig8(), twist(1), trefoil(), clasp, twist(-1)};
        auto got = std::get<FatLink>(mu_act(e, in));
        // clasps contribute 2 lk, the updown twist one more; strand framings collect the closed inputs
        CHECK(linking_of_strands(got) == 2 * linking_of_strands(clasp) + 1);
        CHECK(framing_pair(got) == std::pair{1 - 1, 1});

        // any color-sorting gives the same link
        auto alpha = color_sort(e.inputs());
        for (auto& v : alpha.alpha) std::reverse(v.begin(), v.end());
        CHECK(sample_deviation(std::get<FatLink>(mu_act(e, in, alpha)), got) <= kTol);
        auto bad = alpha;
        std::swap(bad.of(Color::o), bad.of(Color::up));
        CHECK_THROWS_AS(mu_act(e, in, bad), std::invalid_argument);
    }
    SUBCASE("nested catalog knots need a finer resolution") {
        // knots land inside squashed tubes of other knots; at the default chord tolerance
        // the sampled pushoff links the core, the certified count refines until it cannot
        std::vector<Presentation> in{trefoil(), clasp, trefoil(), fig8(), trefoil(), split, fig8()};
        auto got = std::get<FatLink>(mu_act(figure_outer(), in));
        CHECK(framing_pair(got) == std::pair{0, 0});
        CHECK(linking_of_strands(got) == linking_of_strands(clasp) + linking_of_strands(split));
        CHECK(invariant_resolution(got) < kChordTolerance);
        auto u = got.tube(Strand::upper, kChordTolerance);
        CHECK(linking_number(close_below(u.core), close_above(u.pushoff)) != 0);
    }
    SUBCASE("operadic compatibility") {
        auto outer = figure_outer();
        auto inner = figure_inner();
        std::vector<Presentation> in{trefoil(), clasp, fig8(), twist(2), trefoil(), twist(1), fig8(), split, twist(-1)};
        auto composite = mu_act(scl_compose_at(outer, 2, inner), in);
        std::vector<Presentation> inner_in(in.begin() + 2, in.begin() + 5);
        std::vector<Presentation> nested{in[0], in[1], mu_act(inner, inner_in), in[5], in[6], in[7], in[8]};
        CHECK(deviation(composite, mu_act(outer, nested)) <= kTol);

        // an o-output operation with closed cubes inserted into an o slot
        SclElement b({Color::up, Color::o, Color::updown}, Color::o,
                     {rect(q(-1), q(0), q(0), q(1)), rect(q(-1), q(1), q(-1), q(0)), rect(q(0), q(1), q(0), q(1))});
        auto ab = scl_compose_at(outer, 5, b);
        std::vector<Presentation> xs{trefoil(), clasp, fig8(), twist(2), trefoil(), twist(1), clasp, fig8(), twist(-1)};
        std::vector<Presentation> b_in{xs[5], xs[6], xs[7]};
        std::vector<Presentation> nest{xs[0], xs[1], xs[2], xs[3], xs[4], mu_act(b, b_in), xs[8]};
        auto lhs = std::get<FatLink>(mu_act(ab, xs));
        auto rhs = std::get<FatLink>(mu_act(outer, nest));
        CHECK(sample_deviation(lhs, rhs) <= kTol);
        CHECK(linking_of_strands(lhs) == linking_of_strands(rhs));
        CHECK(framing_pair(lhs) == framing_pair(rhs));
    }
    SUBCASE("equivariance") {
        auto e = figure_outer();
        std::vector<Presentation> in{trefoil(), clasp, fig8(), twist(1), trefoil(), split, twist(-1)};
        Perm tau{6, 5, 0, 1, 3, 2, 4};
        std::vector<Presentation> moved;
        for (auto j : tau) moved.push_back(in[j]);
        auto lhs = mu_act(scl_sigma(e, tau), moved);
        auto rhs = mu_act(e, in);
        CHECK(deviation(lhs, rhs) <= kTol);
    }
    SUBCASE("errors") {
        auto e = figure_outer();
        std::vector<Presentation> in{trefoil(), trefoil(), fig8(), twist(1), trefoil(), clasp, twist(-1)};
        CHECK_THROWS_AS(mu_act(e, in), KindMismatch);
        in.pop_back();
        CHECK_THROWS_AS(mu_act(e, in), ValidationError);
    }
}

TEST_CASE("presentation JSON") {
    auto k = compose(twist(1), cube1_conjugate(AffineInc(q(1, 2), q(0)), trefoil()));
    auto j = to_json(k);
    auto back = std::get<FatKnot>(presentation_from_json(j));
    CHECK(to_json(back) == j);
    CHECK(framing_number(back) == framing_number(k));
    // a leaf reproduces the core and the pushoff, not the whole disc
    for (int i = 0; i <= 400; ++i) {
        double t = -1 + 2.0 * i / 400;
        CHECK(dist(back({t, 0, 0}), k({t, 0, 0})) <= 2 * kChordTolerance);
        CHECK(dist(back({t, 0, 1}), k({t, 0, 1})) <= 2 * kChordTolerance);
    }

    auto l = catalog_link("clasp");
    CHECK(to_json(std::get<FatLink>(presentation_from_json(to_json(l)))) == to_json(l));
    CHECK(presentation_from_json(nlohmann::json::parse(j.dump())).index() == 0);

    CHECK_THROWS_AS(presentation_from_json(nlohmann::json{{"kind", "braid"}}), ParseError);
    CHECK_THROWS_AS(presentation_from_json(nlohmann::json{{"kind", "knot"}}), ParseError);
    auto broken = j;
    broken["core"][0] = {-1, 0, 0.5, 0};
    CHECK_THROWS_AS(presentation_from_json(broken), GeometryError);
    auto rows = j;
    rows["pushoff"][1] = {0.1, 0.2};
    CHECK_THROWS_AS(presentation_from_json(rows), ParseError);

    CHECK(catalog_names() == std::vector<std::string>{"clasp", "figure_eight", "split", "trefoil"});
    CHECK_THROWS_AS(catalog_knot("clasp"), ValidationError);
    CHECK_THROWS_AS(load_catalog("nope"), ParseError);
}
