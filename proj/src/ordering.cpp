#include "scl/ordering.hpp"

namespace scl {

PartialOrderDag::PartialOrderDag(std::size_t size) : n_(size), rel_(size * size, false) {}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrderDag::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (less(i, j)) out.emplace_back(i, j);
    return out;
}

PartialOrderDag PartialOrderDag::from_generators(std::size_t n,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& gens) {
    PartialOrderDag d(n);
    for (auto [i, j] : gens) d.rel_.at(i * n + j) = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (d.rel_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (d.rel_[k * n + j]) d.rel_[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (d.rel_[i * n + i]) throw ValidationError("generating relation has a cycle");
    return d;
}

PartialOrderDag PartialOrderDag::reversed() const {
    PartialOrderDag d(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d.rel_[j * n_ + i] = rel_[i * n_ + j];
    return d;
}

PartialOrderDag partial_order(const CubeConfig& l) {
    if (l.dim() != 2) throw std::invalid_argument("partial order needs a 2-dimensional configuration");
    if (l.mode() == CubeMode::overlapping) (void)l.with_mode(CubeMode::disjoint);
    auto heights = heights_t(l);
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < l.arity(); ++i)
        for (std::size_t j = 0; j < l.arity(); ++j) {
            if (!(heights[i] < heights[j])) continue;
            const auto& a = l.cube(i).factor(0);
            const auto& b = l.cube(j).factor(0);
            bool overlap = a.lo() < b.hi() && b.lo() < a.hi();
            if (overlap) gens.emplace_back(i, j);
        }
    return PartialOrderDag::from_generators(l.arity(), gens);
}

namespace {

bool extend(const PartialOrderDag& dag, Perm& prefix, std::vector<bool>& used,
            const std::function<bool(const Perm&)>& visit) {
    const std::size_t n = dag.size();
    if (prefix.size() == n) return visit(prefix);
    for (std::size_t c = 0; c < n; ++c) {
        if (used[c]) continue;
        bool minimal = true;
        for (std::size_t p = 0; p < n && minimal; ++p)
            if (!used[p] && dag.less(p, c)) minimal = false;
        if (!minimal) continue;
        used[c] = true;
        prefix.push_back(c);
        bool go_on = extend(dag, prefix, used, visit);
        prefix.pop_back();
        used[c] = false;
        if (!go_on) return false;
    }
    return true;
}

}  // namespace

void for_each_linear_extension(const PartialOrderDag& dag, const std::function<bool(const Perm&)>& visit) {
    Perm prefix;
    std::vector<bool> used(dag.size(), false);
    extend(dag, prefix, used, visit);
}

std::vector<Perm> linear_extensions(const PartialOrderDag& dag) {
    std::vector<Perm> out;
    for_each_linear_extension(dag, [&](const Perm& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Perm> ordering_permutations(const CubeConfig& l, OrderDirection dir) {
    auto dag = partial_order(l);
    return linear_extensions(dir == OrderDirection::standard ? dag : dag.reversed());
}

Perm canonical_ordering(const CubeConfig& l, OrderDirection dir) {
    auto dag = partial_order(l);
    if (dir == OrderDirection::reverse) dag = dag.reversed();
    Perm first;
    for_each_linear_extension(dag, [&](const Perm& p) {
        first = p;
        return false;
    });
    return first;
}

bool orders(const PartialOrderDag& dag, const Perm& sigma) {
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            if (dag.less(sigma[b], sigma[a])) return false;
    return true;
}

}  // namespace scl
