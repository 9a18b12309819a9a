#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "scl/monoids.hpp"
#include "scl/pi0_operads.hpp"

using namespace scl;
using namespace scl::test;

namespace {

KnotWord kw(std::vector<std::string> l) { return KnotWord(std::move(l)); }

Generators gens_2111() {
    Generators g;
    g.of(Color::o) = {"a", "b"};
    g.of(Color::up) = {"u"};
    g.of(Color::down) = {"d"};
    g.of(Color::updown) = {"w"};
    return g;
}

// Intervals placed left to right in the given order.
CubeConfig c1_in_order(const Perm& order) {
    const auto k = static_cast<std::int64_t>(order.size());
    std::vector<LittleCube> cubes(order.size(), LittleCube::identity(1));
    for (std::size_t p = 0; p < order.size(); ++p) {
        auto lo = q(2 * static_cast<std::int64_t>(p), k) - q(1);
        cubes[order[p]] = interval(lo, lo + q(2, k));
    }
    return CubeConfig(1, std::move(cubes), CubeMode::disjoint);
}

}  // namespace

TEST_CASE("knot words") {
    CHECK(knot_mul(KnotWord{}, kw({"3_1"})) == kw({"3_1"}));
    CHECK(knot_mul(kw({"3_1"}), kw({"4_1"})) == knot_mul(kw({"4_1"}), kw({"3_1"})));
    CHECK(knot_mul(knot_mul(kw({"3_1"}), kw({"3_1"})), kw({"4_1"})).str() == "{3_1,3_1,4_1}");
    CHECK(KnotWord::parse(" { 4_1 , 3_1 } ") == kw({"3_1", "4_1"}));
    CHECK(KnotWord::parse("{}").empty());
    CHECK_THROWS_AS(KnotWord::parse("{3_1,}"), WordSyntaxError);
    CHECK_THROWS_AS(KnotWord::parse("3_1"), WordSyntaxError);

    Alphabets a;
    a.knot = std::set<std::string>{"3_1"};
    CHECK_NOTHROW(knot_mul(kw({"3_1"}), kw({"3_1"}), a));
    CHECK_THROWS_AS(knot_mul(kw({"3_1"}), kw({"4_1"}), a), UnknownLabel);
}

TEST_CASE("link normal forms") {
    LinkNormalForm unit;
    auto q1 = link_letter("q1"), q2 = link_letter("q2");
    auto l = LinkNormalForm::parse("[q1.q2 | up:{3_1} down:{} both:{4_1} | b:-2]");
    CHECK(l.qword == std::vector<std::string>{"q1", "q2"});
    CHECK(l.central_of(Color::up) == kw({"3_1"}));
    CHECK(l.central_of(Color::updown) == kw({"4_1"}));
    CHECK(l.braid == -2);
    CHECK(LinkNormalForm::parse(l.str()) == l);
    CHECK(link_mul(q1, q2).str() == "[q1.q2||0]");
    CHECK(LinkNormalForm::parse("[q1||0]") == q1);
    CHECK(LinkNormalForm::parse("[||0]") == unit);

    CHECK(link_mul(unit, l) == l);
    CHECK(link_mul(l, unit) == l);
    CHECK_FALSE(link_mul(q1, q2) == link_mul(q2, q1));
    auto c = link_mul(phi(Color::up, kw({"3_1"})), braid_unit(3));
    CHECK(link_mul(c, l) == link_mul(l, c));

    CHECK(phi(Color::up, {}) == unit);
    auto both = link_mul(phi(Color::up, kw({"3_1"})), phi(Color::down, kw({"3_1"})));
    CHECK(both.central_of(Color::up) == kw({"3_1"}));
    CHECK(both.central_of(Color::down) == kw({"3_1"}));
    CHECK(both.qword.empty());
    CHECK_THROWS_AS(phi(Color::o, {}), std::invalid_argument);
    CHECK(phi(Color::down, knot_mul(kw({"a"}), kw({"b"}))) == link_mul(phi(Color::down, kw({"a"})), phi(Color::down, kw({"b"}))));

    CHECK(braid_unit(0) == unit);
    CHECK(link_mul(braid_unit(2), braid_unit(-2)) == unit);
    CHECK(link_mul(braid_unit(1), l) == link_mul(l, braid_unit(1)));

    for (auto bad : {"[q1|0]", "q1||0", "[q1||x]", "[q1|up:{3_1|0]", "[q1|o:{}|0]", "[q1..q2||0]", "[q1|up:{} up:{}|0]"})
        CHECK_THROWS_AS(LinkNormalForm::parse(bad), WordSyntaxError);

    Alphabets a;
    a.link = std::set<std::string>{"q1"};
    CHECK_THROWS_AS(link_mul(q1, q2, a), UnknownLabel);
}

TEST_CASE("phi images are injective and meet only in the unit") {
    std::vector<KnotWord> words{{}, kw({"a"}), kw({"b"}), kw({"a", "a"}), kw({"a", "b"})};
    for (auto s : kClosedColors)
        for (auto t : kClosedColors)
            for (const auto& x : words)
                for (const auto& y : words) {
                    bool same = phi(s, x) == phi(t, y);
                    if (s == t)
                        CHECK(same == (x == y));
                    else
                        CHECK(same == (x.empty() && y.empty()));
                }
}

TEST_CASE("center of the link monoid") {
    std::vector<LinkNormalForm> letters{link_letter("q1"), link_letter("q2"), phi(Color::up, kw({"k"})),
                                        phi(Color::down, kw({"k"})), phi(Color::updown, kw({"k"})), braid_unit(1)};
    std::set<LinkNormalForm> all{LinkNormalForm{}};
    for (int n = 0; n < 3; ++n) {
        auto cur = all;
        for (const auto& l : cur)
            for (const auto& x : letters) all.insert(link_mul(l, x));
    }
    for (const auto& l : all) {
        bool commutes = true;
        for (const auto& x : letters) commutes = commutes && link_mul(l, x) == link_mul(x, l);
        CHECK(commutes == l.is_central());
    }
}

TEST_CASE("as_compose") {
    CHECK(as_compose({0, 1, 2}, 1, {1, 0}) == Perm{0, 2, 1, 3});
    CHECK(as_compose({1, 0}, 0, {0, 1}) == Perm{1, 2, 0});
    CHECK(as_compose({1, 0}, 1, {0, 1, 2}) == Perm{3, 0, 1, 2});
    CHECK(as_compose({2, 0, 1}, 1, {}) == Perm{1, 0});
    CHECK_THROWS_AS(as_compose({0, 1}, 2, {0}), std::out_of_range);

    SUBCASE("agrees with composed interval configurations") {
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t m = 0; m <= 3; ++m)
                for (const auto& ol : all_perms(k))
                    for (const auto& op : all_perms(m))
                        for (std::size_t i = 0; i < k; ++i) {
                            auto l = c1_in_order(ol), p = c1_in_order(op);
                            auto composite = pi0_class(cube_compose_at(l, i, p)).rank();
                            CHECK(composite == as_compose(pi0_class(l).rank(), i, pi0_class(p).rank()));
                        }
    }

    SUBCASE("operad laws up to size 4") {
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t m = 0; m + k <= 5; ++m)
                for (const auto& a : all_perms(k))
                    for (const auto& b : all_perms(m))
                        for (std::size_t i = 0; i < k; ++i) {
                            CHECK(as_compose(a, i, identity_perm(1)) == a);
                            // (a sigma) o_i b = (a o_sigma(i) b)(sigma o_i id)
                            for (const auto& s : all_perms(k))
                                CHECK(as_compose(compose_perm(a, s), i, b) ==
                                      compose_perm(as_compose(a, s[i], b), as_compose(s, i, identity_perm(m))));
                            for (const auto& t : all_perms(m))
                                CHECK(as_compose(a, i, compose_perm(b, t)) ==
                                      compose_perm(as_compose(a, i, b), as_compose(identity_perm(k), i, t)));
                            for (std::size_t n = 0; k + m + n <= 6; ++n)
                                for (const auto& c : all_perms(n)) {
                                    for (std::size_t j = 0; j < m; ++j)
                                        CHECK(as_compose(as_compose(a, i, b), i + j, c) == as_compose(a, i, as_compose(b, j, c)));
                                    for (std::size_t j = i + 1; j < k; ++j)
                                        CHECK(as_compose(as_compose(a, i, b), j + m - 1, c) ==
                                              as_compose(as_compose(a, j, c), i, b));
                                }
                        }
        CHECK(as_compose(identity_perm(1), 0, Perm{1, 0}) == Perm{1, 0});
    }
}

TEST_CASE("pi0 SCL composition matches geometry") {
    Pi0Operad op(OperadKind::Pi0SCL);
    auto a = SclElement({Color::o, Color::up, Color::o}, Color::o,
                        {rect(q(0), q(1), q(-1), q(0)), rect(q(-1), q(1), q(0), q(1)), rect(q(-1), q(0), q(-1), q(0))});
    auto b = SclElement({Color::o, Color::o, Color::down}, Color::o,
                        {rect(q(1, 2), q(1), q(-1), q(1)), rect(q(-1), q(1, 2), q(-1), q(0)), rect(q(-1), q(1, 2), q(0), q(1))});
    auto c = SclElement({Color::up, Color::up}, Color::up, {rect(q(-1), q(0), q(-1), q(1)), rect(q(0), q(1), q(-1), q(1))});
    CHECK(pi0_op(a).rank == Perm{1, 0});
    CHECK(pi0_op(scl_compose_at(a, 0, b)) == op.compose(pi0_op(a), 0, pi0_op(b)));
    CHECK(pi0_op(scl_compose_at(a, 2, b)) == op.compose(pi0_op(a), 2, pi0_op(b)));
    CHECK(pi0_op(scl_compose_at(a, 1, c)) == op.compose(pi0_op(a), 1, pi0_op(c)));
    for (const auto& s : all_perms(3)) CHECK(pi0_op(scl_sigma(a, s)) == op.act(pi0_op(a), s));
    CHECK(op.operations({Color::o, Color::up}, Color::up).empty());
    CHECK(op.operations({Color::up, Color::up}, Color::up).size() == 1);
    CHECK(op.operations({Color::o, Color::up, Color::o}, Color::o).size() == 2);
    CHECK_THROWS_AS(op.compose(pi0_op(a), 0, pi0_op(c)), std::invalid_argument);
}

TEST_CASE("free algebras over Com and As") {
    Generators g;
    g.of(Color::up) = {"a", "b"};
    g.of(Color::o) = {"a", "b"};
    FreeAlgebra com(Pi0Operad(OperadKind::Com), g), as(Pi0Operad(OperadKind::As), g);
    CHECK(com.elements(Color::up, 2).size() == 6);  // multisets
    CHECK(as.elements(Color::o, 2).size() == 7);    // sequences
    auto a = com.generator(Color::up, "a"), b = com.generator(Color::up, "b");
    CHECK(com.mul(a, b) == com.mul(b, a));
    auto x = as.generator(Color::o, "a"), y = as.generator(Color::o, "b");
    CHECK_FALSE(as.mul(x, y) == as.mul(y, x));
    CHECK(as.mul(as.mul(x, y), x) == as.mul(x, as.mul(y, x)));
    CHECK_THROWS_AS(as.generator(Color::o, "c"), UnknownLabel);
}

TEST_CASE("orbit quotient and normal forms agree") {
    for (auto kind : {OperadKind::Com, OperadKind::As, OperadKind::Pi0SCL}) {
        auto r = compare_free_models(kind, gens_2111(), 4);
        INFO(to_string(kind), " ", (r.failures.empty() ? "" : r.failures[0]));
        CHECK(r.ok());
        CHECK(r.components > 0);
    }
    Generators g;
    g.of(Color::o) = {"a", "b"};
    g.of(Color::up) = {"a", "b"};
    CHECK(compare_free_models(OperadKind::As, g, 4).components == 1 + 2 + 4 + 8 + 16);
    CHECK(compare_free_models(OperadKind::Com, g, 4).components == 1 + 2 + 3 + 4 + 5);
}

TEST_CASE("normal-form action is compatible with composition") {
    Pi0Operad op(OperadKind::Pi0SCL);
    NormalFormAlgebra nf(op, gens_2111());
    auto gen_of = [&](Color c, int pick) {
        return nf.generator(c, c == Color::o ? (pick ? "b" : "a") : c == Color::up ? "u" : c == Color::down ? "d" : "w");
    };
    std::vector<Color> cs(kAllColors.begin(), kAllColors.end());
    std::size_t checked = 0;
    for (std::size_t ka = 1; ka <= 3; ++ka)
        for (std::size_t kb = 0; ka + kb <= 5; ++kb) {
            std::vector<std::vector<Color>> ta{{}}, tb{{}};
            for (std::size_t n = 0; n < ka; ++n) {
                std::vector<std::vector<Color>> next;
                for (auto& t : ta)
                    for (auto c : cs) {
                        next.push_back(t);
                        next.back().push_back(c);
                    }
                ta = next;
            }
            for (std::size_t n = 0; n < kb; ++n) {
                std::vector<std::vector<Color>> next;
                for (auto& t : tb)
                    for (auto c : cs) {
                        next.push_back(t);
                        next.back().push_back(c);
                    }
                tb = next;
            }
            for (auto out : cs)
                for (const auto& t : ta)
                    for (const auto& a : op.operations(t, out))
                        for (std::size_t i = 0; i < ka; ++i)
                            for (const auto& u : tb)
                                for (const auto& b : op.operations(u, t[i])) {
                                    auto ab = op.compose(a, i, b);
                                    std::vector<SclNormalForm> xs;
                                    for (std::size_t j = 0; j < ab.arity(); ++j) xs.push_back(gen_of(ab.inputs[j], j % 2));
                                    std::vector<SclNormalForm> inner(xs.begin() + i, xs.begin() + i + kb);
                                    std::vector<SclNormalForm> outer(xs.begin(), xs.begin() + i);
                                    outer.push_back(nf.act(b, inner));
                                    outer.insert(outer.end(), xs.begin() + i + kb, xs.end());
                                    CHECK(nf.act(ab, xs) == nf.act(a, outer));
                                    ++checked;
                                }
        }
    CHECK(checked > 1000);
}

TEST_CASE("components of free cube algebras") {
    Generators one;
    one.of(Color::o) = {"x"};
    auto r1 = pi0_of_free(OperadKind::As, one, 3);
    CHECK(r1.ok());
    CHECK(r1.components == 4);

    Generators two;
    two.of(Color::up) = {"x", "y"};
    auto r2 = pi0_of_free(OperadKind::Com, two, 3);
    CHECK(r2.ok());
    CHECK(r2.components == 1 + 2 + 3 + 4);

    auto r3 = pi0_of_free(OperadKind::Pi0SCL, gens_2111(), 3);
    INFO((r3.failures.empty() ? "" : r3.failures[0]));
    CHECK(r3.ok());
}

TEST_CASE("link monoid against the free pi0 SCL carrier") {
    auto r = compare_link_monoid({"q1", "q2"}, {"k"}, 4);
    INFO((r.failures.empty() ? "" : r.failures[0]));
    CHECK(r.ok());
    CHECK(r.components == r.normal_forms);

    auto empty = compare_link_monoid({}, {}, 3);
    CHECK(empty.ok());
    CHECK(empty.components == 1);

    auto unary = compare_link_monoid({"q"}, {}, 4);
    CHECK(unary.ok());
    CHECK(unary.components == 5);
}
