#include "scl/checks.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include "scl/actions.hpp"
#include "scl/config_io.hpp"
#include "scl/invariants.hpp"
#include "scl/pi0_operads.hpp"
#include "scl/presentation.hpp"

namespace scl {

using nlohmann::json;

namespace {

constexpr std::int64_t kGrid = 32;  // coordinates are multiples of 1/32
constexpr std::size_t kKeptFailures = 5;

const std::pair<Mutation, const char*> kMutationNames[] = {
    {Mutation::none, "none"},
    {Mutation::swap_operands, "swap-operands"},
    {Mutation::ignore_order, "ignore-order"},
    {Mutation::flip_direction, "flip-direction"},
    {Mutation::mismatched_alphabet, "mismatched-alphabet"},
    {Mutation::drop_closed_inputs, "drop-closed-inputs"},
};

}  // namespace

const char* to_string(Mutation m) {
    for (auto [k, name] : kMutationNames)
        if (k == m) return name;
    return "?";
}

Mutation mutation_from_string(const std::string& s) {
    for (auto [k, name] : kMutationNames)
        if (s == name) return k;
    throw std::invalid_argument("unknown mutation '" + s + "'");
}

void TrialConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (max_arity < 1) throw std::invalid_argument("max_arity must be at least 1");
    if (dimension != 1 && dimension != 2) throw std::invalid_argument("dimension must be 1 or 2");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
}

bool CheckReport::ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass(); });
}

std::vector<json> CheckReport::lines() const {
    std::vector<json> out;
    for (const auto& p : properties) {
        json j{{"suite", suite}, {"property", p.name}, {"pass", p.pass()}, {"checked", p.checked}, {"failed", p.failed}};
        if (!p.failures.empty()) {
            json fails = json::array();
            for (const auto& f : p.failures)
                fails.push_back({{"seed", f.seed}, {"trial", f.trial}, {"message", f.message}, {"inputs", f.inputs}});
            j["counterexamples"] = fails;
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    std::uint64_t z = seed + trial + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty draw range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

namespace {

AffineInc grid_map(std::int64_t lo, std::int64_t hi) {
    return AffineInc(Rational(hi - lo, 2 * kGrid), Rational(hi + lo, 2 * kGrid));
}

LittleCube random_cube(Rng& rng, std::size_t dim, std::int64_t max_width, bool on_floor) {
    std::vector<AffineInc> f;
    for (std::size_t a = 0; a < dim; ++a) {
        std::int64_t w = draw(rng, 1, max_width);
        std::int64_t lo = (on_floor && a + 1 == dim) ? -kGrid : draw(rng, -kGrid, kGrid - w);
        f.push_back(grid_map(lo, lo + w));
    }
    return LittleCube(std::move(f));
}

// Equal vertical slices: always valid in every mode.
std::vector<LittleCube> slices(std::size_t dim, std::size_t k) {
    std::vector<LittleCube> out;
    const auto n = static_cast<std::int64_t>(k);
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<AffineInc> f{AffineInc(Rational(1, n), Rational(2 * i + 1 - n, n))};
        for (std::size_t a = 1; a < dim; ++a) f.push_back(AffineInc());
        out.emplace_back(std::move(f));
    }
    return out;
}

// Places cubes one at a time, restarting with narrower cubes when stuck.
template <class Fits>
std::vector<LittleCube> place(Rng& rng, std::size_t dim, std::size_t k, const std::function<bool(std::size_t)>& floor,
                              Fits&& fits) {
    for (std::int64_t width = 2 * kGrid; width >= 1; width /= 2) {
        for (int restart = 0; restart < 4; ++restart) {
            std::vector<LittleCube> cubes;
            for (std::size_t i = 0; i < k; ++i) {
                bool placed = false;
                for (int attempt = 0; attempt < 24 && !placed; ++attempt) {
                    auto c = random_cube(rng, dim, width, floor(i));
                    if (fits(cubes, c, i)) {
                        cubes.push_back(std::move(c));
                        placed = true;
                    }
                }
                if (!placed) break;
            }
            if (cubes.size() == k) return cubes;
        }
    }
    return slices(dim, k);
}

}  // namespace

CubeConfig gen_config(Rng& rng, std::size_t dim, std::size_t arity, CubeMode mode) {
    if (arity == 0) return CubeConfig::empty(dim, mode);
    if (dim == 1 && mode == CubeMode::lowerface && arity > 1)
        throw std::invalid_argument("no 1-dimensional lowerface configuration has more than one cube");
    const bool disjoint = mode != CubeMode::overlapping;
    auto cubes = place(rng, dim, arity, [&](std::size_t) { return mode == CubeMode::lowerface; },
                       [&](const std::vector<LittleCube>& prev, const LittleCube& c, std::size_t) {
                           return !disjoint || std::all_of(prev.begin(), prev.end(), [&](const LittleCube& p) {
                               return almost_disjoint(p, c);
                           });
                       });
    return CubeConfig(dim, std::move(cubes), mode);
}

SclElement gen_scl(Rng& rng, std::size_t arity, Color output) {
    std::vector<Color> colors;
    for (std::size_t i = 0; i < arity; ++i)
        colors.push_back(output == Color::o ? kAllColors[static_cast<std::size_t>(draw(rng, 0, 3))] : output);
    auto cubes = place(rng, 2, arity, [&](std::size_t i) { return colors[i] == Color::o; },
                       [&](const std::vector<LittleCube>& prev, const LittleCube& c, std::size_t i) {
                           for (std::size_t j = 0; j < prev.size(); ++j) {
                               bool constrained = output != Color::o || colors[i] == Color::o ||
                                                  colors[j] == Color::o || colors[i] == colors[j];
                               if (constrained && !almost_disjoint(prev[j], c)) return false;
                           }
                           return true;
                       });
    return SclElement(std::move(colors), output, std::move(cubes));
}

const char* to_string(OperadName o) {
    switch (o) {
        case OperadName::C1: return "c1";
        case OperadName::C2: return "c2";
        case OperadName::SCL: return "scl";
    }
    return "?";
}

namespace detail {

// Accumulates property outcomes for one suite.
class Recorder {
public:
    Recorder(std::string suite, const TrialConfig& cfg) : cfg_(cfg) { report_.suite = std::move(suite); }

    void begin_trial(std::size_t trial) { trial_ = trial; }

    void record(const std::string& property, bool ok, const std::function<json()>& inputs, const std::string& message = {}) {
        auto& p = find(property);
        ++p.checked;
        if (ok) return;
        ++p.failed;
        if (p.failures.size() < kKeptFailures) p.failures.push_back({cfg_.seed, trial_, message, inputs()});
    }

    // Runs `body`; an exception counts as a failure of `property`.
    void guarded(const std::string& property, const std::function<json()>& inputs, const std::function<bool()>& body) {
        try {
            record(property, body(), inputs);
        } catch (const std::exception& e) {
            record(property, false, inputs, e.what());
        }
    }

    CheckReport take() { return std::move(report_); }

private:
    PropertyResult& find(const std::string& name) {
        for (auto& p : report_.properties)
            if (p.name == name) return p;
        report_.properties.push_back({name, 0, 0, {}});
        return report_.properties.back();
    }

    const TrialConfig& cfg_;
    CheckReport report_;
    std::size_t trial_ = 0;
};

}  // namespace detail

namespace {

using detail::Recorder;

// Position of each cube of (L o_{sigma(i)} P) that (L sigma) o_i P reads, see the
// equivariance axiom.
Perm outer_block(const Perm& sigma, std::size_t i, std::size_t m) {
    const std::size_t n = sigma.size();
    auto pos = [&](std::size_t p) { return p < sigma[i] ? p : p + m - 1; };
    Perm out;
    for (std::size_t j = 0; j + 1 < n + m; ++j) {
        if (j < i) out.push_back(pos(sigma[j]));
        else if (j < i + m) out.push_back(sigma[i] + (j - i));
        else out.push_back(pos(sigma[j + 1 - m]));
    }
    return out;
}

Perm inner_block(std::size_t n, std::size_t i, const Perm& tau) {
    const std::size_t m = tau.size();
    Perm out;
    for (std::size_t j = 0; j + 1 < n + m; ++j) out.push_back(j < i ? j : j < i + m ? i + tau[j - i] : j);
    return out;
}

Perm random_perm(Rng& rng, std::size_t n) {
    Perm p = identity_perm(n);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(draw(rng, 0, i - 1))]);
    return p;
}

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(n) - 1)); }

// The axioms, written once for both operads.
template <class Op>
struct Axioms {
    std::function<Op(const Op&, std::size_t, const Op&)> compose;
    std::function<Op(const Op&, const Perm&)> act;
    std::function<std::size_t(const Op&)> arity;
    std::function<json(const Op&)> to_json;
};

template <class Op>
void run_axioms(Recorder& rec, const Axioms<Op>& ax, const Op& l, std::size_t i, const Op& p, std::size_t j, const Op& q,
                const std::function<Op(const Op&)>& unit_for_output, const std::function<Op(std::size_t)>& unit_at_input,
                const std::optional<std::pair<std::size_t, Op>>& parallel, Rng& rng) {
    auto inputs = [&] { return json{{"L", ax.to_json(l)}, {"i", i + 1}, {"P", ax.to_json(p)}, {"j", j + 1}, {"Q", ax.to_json(q)}}; };

    rec.guarded("left unit", inputs, [&] { return ax.compose(unit_for_output(l), 0, l) == l; });
    rec.guarded("right unit", inputs, [&] {
        for (std::size_t k = 0; k < ax.arity(l); ++k)
            if (!(ax.compose(l, k, unit_at_input(k)) == l)) return false;
        return true;
    });
    if (ax.arity(p) > 0) {
        rec.guarded("sequential associativity", inputs, [&] {
            return ax.compose(ax.compose(l, i, p), i + j, q) == ax.compose(l, i, ax.compose(p, j, q));
        });
    }
    if (parallel) {
        auto [k, r] = *parallel;  // r goes into input k > i of l
        auto pin = [&] {
            auto in = inputs();
            in["k"] = k + 1;
            in["R"] = ax.to_json(r);
            return in;
        };
        rec.guarded("parallel associativity", pin, [&] {
            return ax.compose(ax.compose(l, i, p), k + ax.arity(p) - 1, r) == ax.compose(ax.compose(l, k, r), i, p);
        });
    }
    Perm sigma = random_perm(rng, ax.arity(l));
    Perm tau = random_perm(rng, ax.arity(p));
    auto pinputs = [&] {
        auto in = inputs();
        in["sigma"] = sigma;
        in["tau"] = tau;
        return in;
    };
    rec.guarded("equivariance (outer)", pinputs, [&] {
        // insert at the position that sigma sends to i, so P still fits
        std::size_t at = inverse(sigma)[i];
        return ax.compose(ax.act(l, sigma), at, p) == ax.act(ax.compose(l, i, p), outer_block(sigma, at, ax.arity(p)));
    });
    rec.guarded("equivariance (inner)", pinputs, [&] {
        return ax.compose(l, i, ax.act(p, tau)) == ax.act(ax.compose(l, i, p), inner_block(ax.arity(l), i, tau));
    });
    rec.guarded("action law", pinputs, [&] {
        Perm rho = random_perm(rng, ax.arity(l));
        return ax.act(ax.act(l, sigma), rho) == ax.act(l, compose_perm(sigma, rho)) &&
               ax.act(l, identity_perm(ax.arity(l))) == l;
    });
}

}  // namespace

CheckReport check_operad_axioms(const TrialConfig& cfg, OperadName operad) {
    cfg.validate();
    Recorder rec(to_string(operad), cfg);
    const bool mutate = cfg.mutation == Mutation::swap_operands;
    const auto n = static_cast<std::int64_t>(cfg.max_arity);

    for (std::size_t t = cfg.first_trial; t < cfg.first_trial + cfg.trials; ++t) {
        rec.begin_trial(t);
        Rng rng(trial_seed(cfg.seed, t));

        if (operad != OperadName::SCL) {
            const std::size_t dim = operad == OperadName::C1 ? 1 : 2;
            auto gen = [&](std::size_t k) { return gen_config(rng, dim, k, CubeMode::disjoint); };
            Axioms<CubeConfig> ax{
                [&](const CubeConfig& a, std::size_t i, const CubeConfig& b) {
                    return mutate && b.arity() > 0 ? cube_compose_at(b, 0, a) : cube_compose_at(a, i, b);
                },
                cube_sigma, [](const CubeConfig& c) { return c.arity(); }, config_to_json};
            auto l = gen(static_cast<std::size_t>(draw(rng, 1, n)));
            auto p = gen(static_cast<std::size_t>(draw(rng, 0, n)));
            auto q = gen(static_cast<std::size_t>(draw(rng, 0, n)));
            std::size_t i = pick(rng, l.arity());
            std::size_t j = p.arity() > 0 ? pick(rng, p.arity()) : 0;
            std::optional<std::pair<std::size_t, CubeConfig>> par;
            if (i + 1 < l.arity()) par.emplace(i + 1 + pick(rng, l.arity() - i - 1), gen(static_cast<std::size_t>(draw(rng, 0, n))));
            run_axioms<CubeConfig>(rec, ax, l, i, p, j, q, [&](const CubeConfig&) { return CubeConfig::unit(dim); },
                                   [&](std::size_t) { return CubeConfig::unit(dim); }, par, rng);
            continue;
        }

        Axioms<SclElement> ax{
            [&](const SclElement& a, std::size_t i, const SclElement& b) {
                return mutate && b.arity() > 0 ? scl_compose_at(b, 0, a) : scl_compose_at(a, i, b);
            },
            scl_sigma, [](const SclElement& e) { return e.arity(); }, scl_to_json};
        auto gen = [&](std::size_t k, Color out) { return gen_scl(rng, k, out); };
        // an operation with at least one input, its input i, and operations fitting below
        auto l = gen(static_cast<std::size_t>(draw(rng, 1, n)), kAllColors[pick(rng, 4)]);
        std::size_t i = pick(rng, l.arity());
        auto p = gen(static_cast<std::size_t>(draw(rng, 0, n)), l.inputs()[i]);
        std::size_t j = p.arity() > 0 ? pick(rng, p.arity()) : 0;
        auto q = p.arity() > 0 ? gen(static_cast<std::size_t>(draw(rng, 0, n)), p.inputs()[j]) : SclElement::identity(Color::o);
        std::optional<std::pair<std::size_t, SclElement>> par;
        if (i + 1 < l.arity()) {
            std::size_t k = i + 1 + pick(rng, l.arity() - i - 1);
            par.emplace(k, gen(static_cast<std::size_t>(draw(rng, 0, n)), l.inputs()[k]));
        }
        run_axioms<SclElement>(
            rec, ax, l, i, p, j, q, [](const SclElement& e) { return SclElement::identity(e.output()); },
            [&](std::size_t k) { return SclElement::identity(l.inputs()[k]); }, par, rng);

        auto inputs = [&] { return json{{"A", scl_to_json(l)}, {"i", i + 1}, {"B", scl_to_json(p)}}; };
        rec.guarded("color bookkeeping", inputs, [&] {
            auto r = ax.compose(l, i, p);
            for (auto s : kAllColors) {
                std::size_t want = color_count(l.inputs(), s) + color_count(p.inputs(), s) - (l.inputs()[i] == s ? 1 : 0);
                if (color_count(r.inputs(), s) != want) return false;
            }
            return r.arity() == l.arity() + p.arity() - 1 && r.output() == l.output();
        });
    }
    return rec.take();
}

namespace {

bool strictly_below(const LittleCube& a, const LittleCube& b) {
    const auto &ax = a.factor(0), &bx = b.factor(0);
    bool x_meet = std::max(ax.lo(), bx.lo()) < std::min(ax.hi(), bx.hi());
    return x_meet && a.factor(1).lo() < b.factor(1).lo();
}

// Every permutation, kept when no later cube sits below an earlier one it overlaps.
std::vector<Perm> brute_orderings(const CubeConfig& l, OrderDirection dir) {
    std::vector<Perm> out;
    for (const auto& sigma : all_perms(l.arity())) {
        bool ok = true;
        for (std::size_t p = 0; p < sigma.size() && ok; ++p)
            for (std::size_t q = p + 1; q < sigma.size() && ok; ++q) {
                const auto &first = l.cube(sigma[p]), &later = l.cube(sigma[q]);
                ok = dir == OrderDirection::standard ? !strictly_below(later, first) : !strictly_below(first, later);
            }
        if (ok) out.push_back(sigma);
    }
    return out;
}

}  // namespace

CheckReport check_ordering(const TrialConfig& cfg) {
    cfg.validate();
    Recorder rec("ordering", cfg);
    const auto n = static_cast<std::int64_t>(std::min<std::size_t>(cfg.max_arity, 8));
    for (std::size_t t = cfg.first_trial; t < cfg.first_trial + cfg.trials; ++t) {
        rec.begin_trial(t);
        Rng rng(trial_seed(cfg.seed, t));
        auto l = gen_config(rng, 2, static_cast<std::size_t>(draw(rng, 0, n)), CubeMode::disjoint);
        auto inputs = [&] { return json{{"config", config_to_json(l)}}; };
        for (auto dir : {OrderDirection::standard, OrderDirection::reverse}) {
            auto asked = dir;
            if (cfg.mutation == Mutation::flip_direction)
                asked = dir == OrderDirection::standard ? OrderDirection::reverse : OrderDirection::standard;
            const std::string tag = dir == OrderDirection::standard ? "" : " (reverse)";
            auto want = brute_orderings(l, dir);
            rec.guarded("ordering permutations" + tag, inputs, [&] { return ordering_permutations(l, asked) == want; });
            rec.guarded("canonical ordering" + tag, inputs, [&] { return !want.empty() && canonical_ordering(l, asked) == want.front(); });
        }
    }
    return rec.take();
}

namespace {

struct NamedKnot {
    std::string name;
    FatKnot knot;
};

struct NamedInput {
    std::string name;
    Presentation value;
};

std::vector<NamedKnot> knot_pool() {
    return {{"trefoil", catalog_knot("trefoil")}, {"figure_eight", catalog_knot("figure_eight")},
            {"twist(1)", twist(1)}, {"twist(-1)", twist(-1)}};
}

std::vector<NamedInput> link_pool() {
    return {{"clasp", catalog_link("clasp")}, {"split", catalog_link("split")}};
}

FatKnot in_order(const CubeConfig& l, const std::vector<FatKnot>& knots, const Perm& order) {
    auto factor = [&](std::size_t i) { return cube1_conjugate(l.cube(i).factor(0), knots[i]); };
    FatKnot k = factor(order.back());
    for (std::size_t j = order.size() - 1; j-- > 0;) k = compose(factor(order[j]), k);
    return k;
}

json names_json(const std::vector<std::string>& names) { return json(names); }

}  // namespace

CheckReport check_kappa_well_defined(const TrialConfig& cfg) {
    cfg.validate();
    Recorder rec("kappa", cfg);
    const auto pool = knot_pool();
    const auto n = static_cast<std::int64_t>(std::clamp<std::size_t>(cfg.max_arity, 2, 4));
    for (std::size_t t = cfg.first_trial; t < cfg.first_trial + cfg.trials; ++t) {
        rec.begin_trial(t);
        Rng rng(trial_seed(cfg.seed, t));
        const auto k = static_cast<std::size_t>(draw(rng, 2, n));
        // want at least two linear extensions; side-by-side slices always qualify
        CubeConfig l = CubeConfig::empty(2);
        for (int attempt = 0;; ++attempt) {
            l = attempt < 50 ? gen_config(rng, 2, k, CubeMode::disjoint)
                             : CubeConfig(2, slices(2, k), CubeMode::disjoint);
            if (ordering_permutations(l).size() >= 2) break;
        }
        std::vector<FatKnot> knots;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& nk = pool[pick(rng, pool.size())];
            knots.push_back(nk.knot);
            names.push_back(nk.name);
        }
        Perm tau = random_perm(rng, k);
        auto inputs = [&] { return json{{"config", config_to_json(l)}, {"knots", names_json(names)}, {"tau", tau}}; };

        for (auto dir : {OrderDirection::standard, OrderDirection::reverse}) {
            const std::string tag = dir == OrderDirection::standard ? "" : " (reverse)";
            rec.guarded("extension orders agree" + tag, inputs, [&] {
                auto ref = kappa_act(l, knots, dir);
                const int w = framing_number(ref);
                auto orders = cfg.mutation == Mutation::ignore_order ? all_perms(k) : ordering_permutations(l, dir);
                for (const auto& sigma : orders) {
                    auto f = in_order(l, knots, sigma);
                    if (sample_deviation(f, ref) > cfg.tolerance || framing_number(f) != w) return false;
                }
                return true;
            });
        }
        rec.guarded("equivariance", inputs, [&] {
            std::vector<FatKnot> moved;
            auto inv = inverse(tau);
            for (std::size_t i = 0; i < k; ++i) moved.push_back(knots[inv[i]]);
            auto lhs = kappa_act(cube_sigma(l, tau), knots);
            auto rhs = kappa_act(l, moved);
            return sample_deviation(lhs, rhs) <= cfg.tolerance && framing_number(lhs) == framing_number(rhs);
        });
    }
    return rec.take();
}

CheckReport check_pi0_theorems(const TrialConfig& cfg) {
    cfg.validate();
    Recorder rec("pi0", cfg);
    rec.begin_trial(0);
    Generators gens;
    gens.of(Color::o) = {"a", "b"};
    gens.of(Color::up) = {"u"};
    gens.of(Color::down) = {"d"};
    gens.of(Color::updown) = {"w"};
    const std::size_t arity = std::min<std::size_t>(cfg.max_arity, 3);
    constexpr std::size_t kWords = 4;

    auto add = [&](const std::string& property, const std::function<Pi0Report()>& run) {
        try {
            auto r = run();
            json payload{{"elements", r.elements}, {"components", r.components}, {"failures", r.failures}};
            rec.record(property, r.ok(), [&] { return payload; }, r.ok() ? "" : r.failures.front());
        } catch (const std::exception& e) {
            rec.record(property, false, [] { return json::object(); }, e.what());
        }
    };
    for (auto kind : {OperadKind::Com, OperadKind::As, OperadKind::Pi0SCL}) {
        add(std::string("free models ") + to_string(kind), [&] { return compare_free_models(kind, gens, kWords); });
        add(std::string("components of free cube algebras ") + to_string(kind),
            [&] { return pi0_of_free(kind, gens, arity); });
    }
    auto monoid = [&](std::vector<std::string> links, std::vector<std::string> knots) {
        Generators free_side;
        free_side.of(Color::o) = links;
        for (auto s : kClosedColors) free_side.of(s) = knots;
        if (cfg.mutation == Mutation::mismatched_alphabet) {
            if (!knots.empty()) for (auto s : kClosedColors) free_side.of(s).pop_back();
            else if (!links.empty()) free_side.of(Color::o).pop_back();
        }
        return compare_link_monoid(links, knots, kWords, free_side);
    };
    add("link monoid", [&] { return monoid({"q1", "q2"}, {"k"}); });
    add("link monoid (empty alphabets)", [&] { return monoid({}, {}); });
    add("link monoid (one link prime)", [&] { return monoid({"q"}, {}); });
    return rec.take();
}

namespace {

double deviation(const Presentation& a, const Presentation& b) {
    if (a.index() != b.index()) return std::numeric_limits<double>::infinity();
    if (auto* k = std::get_if<FatKnot>(&a)) return sample_deviation(*k, std::get<FatKnot>(b));
    return sample_deviation(std::get<FatLink>(a), std::get<FatLink>(b));
}

// Same invariants and pointwise agreement.
bool agree(const Presentation& a, const Presentation& b, double tol) {
    if (a.index() != b.index() || deviation(a, b) > tol) return false;
    if (auto* k = std::get_if<FatKnot>(&a)) return framing_number(*k) == framing_number(std::get<FatKnot>(b));
    const auto &la = std::get<FatLink>(a), &lb = std::get<FatLink>(b);
    return linking_of_strands(la) == linking_of_strands(lb) && framing_pair(la) == framing_pair(lb);
}

}  // namespace

CheckReport check_mu_action(const TrialConfig& cfg) {
    cfg.validate();
    Recorder rec("mu", cfg);
    const auto knots = knot_pool();
    const auto links = link_pool();
    const auto total = static_cast<std::int64_t>(std::clamp<std::size_t>(cfg.max_arity, 1, 4));
    const bool drop = cfg.mutation == Mutation::drop_closed_inputs;

    for (std::size_t t = cfg.first_trial; t < cfg.first_trial + cfg.trials; ++t) {
        rec.begin_trial(t);
        Rng rng(trial_seed(cfg.seed, t));
        auto input_for = [&](Color c) -> NamedInput {
            if (c == Color::o) return links[pick(rng, links.size())];
            const auto& k = knots[pick(rng, knots.size())];
            return {k.name, k.knot};
        };

        {
            Color s = kClosedColors[pick(rng, 3)];
            const auto& k = knots[pick(rng, knots.size())];
            auto inputs = [&] { return json{{"color", to_string(s)}, {"knot", k.name}}; };
            rec.guarded("identity cube gives phi_hat", inputs, [&] {
                SclElement e({s}, Color::o, {LittleCube::identity(2)});
                return agree(mu_act(e, {k.knot}), Presentation(phi_hat(s, k.knot)), cfg.tolerance);
            });
        }

        auto a = gen_scl(rng, static_cast<std::size_t>(draw(rng, 1, total)), kAllColors[pick(rng, 4)]);
        std::size_t i = pick(rng, a.arity());
        auto b = gen_scl(rng, static_cast<std::size_t>(draw(rng, 0, total + 1 - static_cast<std::int64_t>(a.arity()))),
                         a.inputs()[i]);
        auto ab = scl_compose_at(a, i, b);
        std::vector<NamedInput> xs;
        for (auto c : ab.inputs()) xs.push_back(input_for(c));
        Perm sigma = random_perm(rng, a.arity());
        auto names = [&] {
            std::vector<std::string> out;
            for (const auto& x : xs) out.push_back(x.name);
            return out;
        };
        auto inputs = [&] {
            return json{{"A", scl_to_json(a)}, {"i", i + 1}, {"B", scl_to_json(b)}, {"inputs", names_json(names())}, {"sigma", sigma}};
        };

        rec.guarded("operadic compatibility", inputs, [&] {
            std::vector<Presentation> flat, inner, outer;
            for (const auto& x : xs) flat.push_back(x.value);
            for (std::size_t k = 0; k < b.arity(); ++k) {
                Presentation v = xs[i + k].value;
                if (drop && b.inputs()[k] != Color::o) v = standard_knot();
                inner.push_back(v);
            }
            for (std::size_t k = 0; k < a.arity(); ++k) {
                if (k < i) outer.push_back(flat[k]);
                else if (k == i) outer.push_back(mu_act(b, inner));
                else outer.push_back(flat[k + b.arity() - 1]);
            }
            return agree(mu_act(ab, flat), mu_act(a, outer), cfg.tolerance);
        });
        rec.guarded("equivariance", inputs, [&] {
            std::vector<Presentation> in, moved;
            for (std::size_t k = 0; k < a.arity(); ++k) in.push_back(input_for(a.inputs()[k]).value);
            for (auto j : sigma) moved.push_back(in[j]);
            return agree(mu_act(scl_sigma(a, sigma), moved), mu_act(a, in), cfg.tolerance);
        });
    }
    return rec.take();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"c1", "c2", "scl", "ordering", "kappa", "pi0", "mu"};
    return names;
}

CheckReport run_suite(const std::string& name, const TrialConfig& cfg) {
    if (name == "c1") return check_operad_axioms(cfg, OperadName::C1);
    if (name == "c2") return check_operad_axioms(cfg, OperadName::C2);
    if (name == "scl") return check_operad_axioms(cfg, OperadName::SCL);
    if (name == "ordering") return check_ordering(cfg);
    if (name == "kappa") return check_kappa_well_defined(cfg);
    if (name == "pi0") return check_pi0_theorems(cfg);
    if (name == "mu") return check_mu_action(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace scl
