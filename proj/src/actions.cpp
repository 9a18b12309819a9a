#include "scl/actions.hpp"

#include <string>

namespace scl {

namespace {

CubeConfig checked_c2(const CubeConfig& l) {
    if (l.dim() != 2) throw ValidationError("kappa needs a 2-dimensional configuration");
    return l.mode() == CubeMode::disjoint ? l : l.with_mode(CubeMode::disjoint);
}

void check_count(std::size_t want, std::size_t got, const char* what) {
    if (want != got)
        throw ValidationError(std::string(what) + ": configuration has arity " + std::to_string(want) + " but " +
                              std::to_string(got) + " inputs were given");
}

FatKnot compose_in_order(const CubeConfig& l, const std::vector<FatKnot>& knots, const Perm& order) {
    if (order.empty()) return standard_knot();
    auto factor = [&](std::size_t i) { return cube1_conjugate(l.cube(i).factor(0), knots[i]); };
    FatKnot k = factor(order.back());
    for (std::size_t j = order.size() - 1; j-- > 0;) k = compose(factor(order[j]), k);
    return k;
}

}  // namespace

FatKnot kappa_act(const CubeConfig& l, const std::vector<FatKnot>& knots, OrderDirection dir) {
    auto c = checked_c2(l);
    check_count(c.arity(), knots.size(), "kappa");
    return compose_in_order(c, knots, canonical_ordering(c, dir));
}

FatKnot kappa_act(const CubeConfig& l, const std::vector<FatKnot>& knots, const Perm& order, OrderDirection dir) {
    auto c = checked_c2(l);
    check_count(c.arity(), knots.size(), "kappa");
    auto dag = partial_order(c);
    if (dir == OrderDirection::reverse) dag = dag.reversed();
    if (!is_perm(order) || order.size() != c.arity() || !orders(dag, order))
        throw ValidationError("the given order is not an ordering permutation of the configuration");
    return compose_in_order(c, knots, order);
}

FatLink lambda_act(const CubeConfig& l, const std::vector<FatLink>& links) {
    if (l.dim() != 1) throw ValidationError("lambda needs a 1-dimensional configuration");
    auto c = l.mode() == CubeMode::disjoint ? l : l.with_mode(CubeMode::disjoint);
    check_count(c.arity(), links.size(), "lambda");
    if (c.arity() == 0) return standard_link();
    std::vector<std::pair<AffineInc, FatLink>> pieces;
    for (std::size_t i = 0; i < c.arity(); ++i) pieces.emplace_back(c.cube(i).factor(0), links[i]);
    return concatenate(pieces);
}

FatLink phi_hat(Color s, const FatKnot& f) {
    auto id = standard_knot();
    switch (s) {
        case Color::up: return sandwich(id, standard_link(), f, id);
        case Color::down: return sandwich(id, standard_link(), id, f);
        case Color::updown: return sandwich(f, standard_link(), id, id);
        case Color::o: break;
    }
    throw std::invalid_argument("phi_hat is defined for the colors up, down and updown");
}

Presentation mu_act(const SclElement& e, const std::vector<Presentation>& inputs) {
    return mu_act(e, inputs, color_sort(e.inputs()));
}

Presentation mu_act(const SclElement& e, const std::vector<Presentation>& inputs, const ColorSort& alpha) {
    check_count(e.arity(), inputs.size(), "mu");
    if (!alpha.sorts(e.inputs())) throw std::invalid_argument("the color-sorting does not sort the input colors");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        bool link = std::holds_alternative<FatLink>(inputs[i]);
        if (link != (e.inputs()[i] == Color::o))
            throw KindMismatch("input " + std::to_string(i + 1) + " has color " + to_string(e.inputs()[i]) + " but is a " +
                               (link ? "link" : "knot"));
    }
    auto knots_of = [&](Color s) {
        std::vector<FatKnot> out;
        for (auto i : alpha.of(s)) out.push_back(std::get<FatKnot>(inputs[i]));
        return out;
    };
    auto cubes_of = [&](Color s) {
        std::vector<LittleCube> out;
        for (auto i : alpha.of(s)) out.push_back(e.config().cube(i));
        return CubeConfig(2, std::move(out), CubeMode::disjoint);
    };
    auto kappa_of = [&](Color s) {
        return kappa_act(cubes_of(s), knots_of(s), s == Color::updown ? OrderDirection::reverse : OrderDirection::standard);
    };

    if (e.output() != Color::o) return kappa_of(e.output());

    std::vector<LittleCube> o_cubes;
    std::vector<FatLink> links;
    for (auto i : alpha.of(Color::o)) {
        o_cubes.push_back(LittleCube({e.config().cube(i).factor(0)}));
        links.push_back(std::get<FatLink>(inputs[i]));
    }
    auto lambda = lambda_act(CubeConfig(1, std::move(o_cubes), CubeMode::disjoint), links);
    if (alpha.of(Color::o).size() == e.arity()) return lambda;
    return sandwich(kappa_of(Color::updown), lambda, kappa_of(Color::up), kappa_of(Color::down));
}

}  // namespace scl
