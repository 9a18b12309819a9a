#include "scl/pi0_operads.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace scl {

Perm as_compose(const Perm& sigma, std::size_t i, const Perm& tau) {
    if (!is_perm(sigma) || !is_perm(tau)) throw std::invalid_argument("as_compose expects permutations");
    const std::size_t k = sigma.size(), m = tau.size();
    if (i >= k) throw std::out_of_range("as_compose index out of range");
    auto bump = [&](std::size_t v) { return v < sigma[i] ? v : v + m - 1; };
    Perm out(k + m - 1);
    for (std::size_t j = 0; j < i; ++j) out[j] = bump(sigma[j]);
    for (std::size_t j = 0; j < m; ++j) out[i + j] = sigma[i] + tau[j];
    for (std::size_t j = i + 1; j < k; ++j) out[j + m - 1] = bump(sigma[j]);
    return out;
}

const char* to_string(OperadKind k) {
    switch (k) {
        case OperadKind::Com: return "Com";
        case OperadKind::As: return "As";
        case OperadKind::Pi0SCL: return "Pi0SCL";
    }
    return "?";
}

namespace {

std::size_t slot(Color c) { return static_cast<std::size_t>(c) - 1; }

// o-index of each input position (npos for closed inputs).
std::vector<std::size_t> o_indices(const std::vector<Color>& t) {
    std::vector<std::size_t> idx(t.size(), static_cast<std::size_t>(-1));
    std::size_t n = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
        if (t[j] == Color::o) idx[j] = n++;
    return idx;
}

}  // namespace

std::vector<Color> Pi0Operad::colors() const {
    switch (kind_) {
        case OperadKind::Com: return {Color::up};
        case OperadKind::As: return {Color::o};
        case OperadKind::Pi0SCL: break;
    }
    return {kAllColors.begin(), kAllColors.end()};
}

bool Pi0Operad::valid(const Pi0Op& a) const {
    auto cs = colors();
    auto allowed = [&](Color c) { return std::find(cs.begin(), cs.end(), c) != cs.end(); };
    if (!allowed(a.output) || !std::all_of(a.inputs.begin(), a.inputs.end(), allowed)) return false;
    if (a.output != Color::o || kind_ == OperadKind::Com)
        return a.rank.empty() && color_count(a.inputs, a.output) == a.arity();
    return a.rank.size() == color_count(a.inputs, Color::o) && is_perm(a.rank);
}

void Pi0Operad::require(const Pi0Op& a) const {
    if (!valid(a)) throw std::invalid_argument(std::string("not an operation of ") + to_string(kind_));
}

Pi0Op Pi0Operad::identity(Color c) const {
    Pi0Op a{{c}, c, {}};
    if (c == Color::o && kind_ != OperadKind::Com) a.rank = {0};
    require(a);
    return a;
}

std::vector<Pi0Op> Pi0Operad::operations(const std::vector<Color>& inputs, Color output) const {
    std::vector<Pi0Op> out;
    if (output == Color::o && kind_ != OperadKind::Com) {
        for (auto& r : all_perms(color_count(inputs, Color::o))) out.push_back({inputs, output, std::move(r)});
    } else {
        out.push_back({inputs, output, {}});
    }
    std::erase_if(out, [&](const Pi0Op& a) { return !valid(a); });
    return out;
}

Pi0Op Pi0Operad::compose(const Pi0Op& a, std::size_t i, const Pi0Op& b) const {
    require(a);
    require(b);
    if (i >= a.arity()) throw std::out_of_range("composition index out of range");
    if (b.output != a.inputs[i]) throw std::invalid_argument("color mismatch in composition");
    Pi0Op r{splice_colors(a.inputs, i, b.inputs), a.output, a.rank};
    if (!a.rank.empty() && a.inputs[i] == Color::o) r.rank = as_compose(a.rank, o_indices(a.inputs)[i], b.rank);
    return r;
}

Pi0Op Pi0Operad::act(const Pi0Op& a, const Perm& sigma) const {
    require(a);
    if (sigma.size() != a.arity() || !is_perm(sigma)) throw std::invalid_argument("permutation size mismatch");
    Pi0Op r{{}, a.output, {}};
    for (auto s : sigma) r.inputs.push_back(a.inputs[s]);
    if (!a.rank.empty()) {
        auto old_idx = o_indices(a.inputs);
        for (auto s : sigma)
            if (a.inputs[s] == Color::o) r.rank.push_back(a.rank[old_idx[s]]);
    }
    return r;
}

Pi0Op Pi0Operad::product(Color c) const {
    Pi0Op a{{c, c}, c, {}};
    if (c == Color::o && kind_ != OperadKind::Com) a.rank = {0, 1};
    require(a);
    return a;
}

Pi0Op pi0_op(const CubeConfig& l) {
    if (l.dim() == 1) return {std::vector<Color>(l.arity(), Color::o), Color::o, pi0_class(l).rank()};
    (void)pi0_class(l);
    return {std::vector<Color>(l.arity(), Color::up), Color::up, {}};
}

Pi0Op pi0_op(const SclElement& e) {
    Pi0Op a{e.inputs(), e.output(), {}};
    if (e.output() == Color::o) a.rank = pi0_class_scl(e).rank();
    return a;
}

namespace {

Generators restrict_to(const Pi0Operad& op, Generators g) {
    auto cs = op.colors();
    for (auto c : kAllColors)
        if (std::find(cs.begin(), cs.end(), c) == cs.end()) g.of(c).clear();
    for (auto& v : g.by_color) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return g;
}

void check_label(const Generators& g, Color c, const std::string& label) {
    const auto& v = g.of(c);
    if (!std::binary_search(v.begin(), v.end(), label))
        throw UnknownLabel("'" + label + "' is not a generator of color " + to_string(c));
}

// Calls f on every tuple drawn from the given choice lists.
template <class T, class F>
void for_each_tuple(const std::vector<const std::vector<T>*>& choices, F&& f) {
    for (auto* c : choices)
        if (c->empty()) return;
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<T> cur(choices.size());
    while (true) {
        for (std::size_t j = 0; j < choices.size(); ++j) cur[j] = (*choices[j])[idx[j]];
        f(cur);
        std::size_t j = choices.size();
        while (j > 0) {
            --j;
            if (++idx[j] < choices[j]->size()) break;
            idx[j] = 0;
            if (j == 0) return;
        }
        if (choices.empty()) return;
    }
}

std::vector<std::vector<Color>> color_tuples(const std::vector<Color>& cs, std::size_t k) {
    std::vector<std::vector<Color>> out;
    std::vector<const std::vector<Color>*> choices(k, &cs);
    for_each_tuple<Color>(choices, [&](const std::vector<Color>& t) { out.push_back(t); });
    return out;
}

std::vector<std::string> permuted(const std::vector<std::string>& xs, const Perm& sigma) {
    std::vector<std::string> r;
    for (auto s : sigma) r.push_back(xs[s]);
    return r;
}

}  // namespace

FreeAlgebra::FreeAlgebra(Pi0Operad op, Generators gens) : op_(op), gens_(restrict_to(op, std::move(gens))) {}

FreeElement FreeAlgebra::generator(Color c, const std::string& label) const {
    check_label(gens_, c, label);
    return {op_.identity(c), {label}};
}

FreeElement FreeAlgebra::normalize(FreeElement e) const {
    if (!op_.valid(e.op) || e.inputs.size() != e.op.arity()) throw std::invalid_argument("malformed free element");
    for (std::size_t j = 0; j < e.inputs.size(); ++j) check_label(gens_, e.op.inputs[j], e.inputs[j]);
    FreeElement best = e;
    for (const auto& s : all_perms(e.op.arity())) {
        FreeElement cand{op_.act(e.op, s), permuted(e.inputs, s)};
        if (cand < best) best = std::move(cand);
    }
    return best;
}

FreeElement FreeAlgebra::act(const Pi0Op& a, const std::vector<FreeElement>& xs) const {
    if (xs.size() != a.arity()) throw std::invalid_argument("wrong number of inputs");
    Pi0Op r = a;
    for (std::size_t j = a.arity(); j-- > 0;) {
        if (xs[j].color() != a.inputs[j]) throw std::invalid_argument("input color mismatch");
        r = op_.compose(r, j, xs[j].op);
    }
    FreeElement e{r, {}};
    for (const auto& x : xs) e.inputs.insert(e.inputs.end(), x.inputs.begin(), x.inputs.end());
    return normalize(std::move(e));
}

FreeElement FreeAlgebra::mul(const FreeElement& a, const FreeElement& b) const {
    if (a.color() != b.color()) throw std::invalid_argument("multiplying elements of different colors");
    return act(op_.product(a.color()), {a, b});
}

std::vector<FreeElement> FreeAlgebra::elements(Color c, std::size_t max_arity) const {
    std::set<FreeElement> out;
    auto cs = op_.colors();
    for (std::size_t k = 0; k <= max_arity; ++k)
        for (const auto& t : color_tuples(cs, k))
            for (const auto& a : op_.operations(t, c)) {
                std::vector<const std::vector<std::string>*> choices;
                for (auto col : t) choices.push_back(&gens_.of(col));
                for_each_tuple<std::string>(choices, [&](const std::vector<std::string>& xs) {
                    out.insert(normalize({a, xs}));
                });
            }
    return {out.begin(), out.end()};
}

std::size_t SclNormalForm::size() const {
    std::size_t n = word.size();
    for (const auto& k : central) n += k.size();
    return n;
}

std::string SclNormalForm::str() const {
    std::string s = to_string(color);
    s += ":[";
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "." : "") + word[i];
    s += "|";
    for (std::size_t i = 0; i < 3; ++i) s += (i ? "," : "") + central[i].str();
    return s + "]";
}

NormalFormAlgebra::NormalFormAlgebra(Pi0Operad op, Generators gens) : op_(op), gens_(restrict_to(op, std::move(gens))) {}

SclNormalForm NormalFormAlgebra::generator(Color c, const std::string& label) const {
    check_label(gens_, c, label);
    SclNormalForm n{c, {}, {}};
    if (c == Color::o)
        n.word = {label};
    else
        n.central[slot(c)] = KnotWord({label});
    return n;
}

SclNormalForm NormalFormAlgebra::unit(Color c) const { return {c, {}, {}}; }

SclNormalForm NormalFormAlgebra::act(const Pi0Op& a, const std::vector<SclNormalForm>& xs) const {
    if (!op_.valid(a)) throw std::invalid_argument("not an operation of this operad");
    if (xs.size() != a.arity()) throw std::invalid_argument("wrong number of inputs");
    SclNormalForm r = unit(a.output);
    std::vector<std::size_t> o_pos;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j].color != a.inputs[j]) throw std::invalid_argument("input color mismatch");
        if (a.inputs[j] == Color::o) o_pos.push_back(j);
        // closed inputs only carry their own slot, so a plain union pushes them through phi^s
        for (std::size_t s = 0; s < 3; ++s) r.central[s] = knot_mul(r.central[s], xs[j].central[s]);
    }
    if (!a.rank.empty())
        for (auto j : inverse(a.rank)) {
            const auto& w = xs[o_pos[j]].word;
            r.word.insert(r.word.end(), w.begin(), w.end());
        }
    return r;
}

SclNormalForm NormalFormAlgebra::mul(const SclNormalForm& a, const SclNormalForm& b) const {
    if (a.color != b.color) throw std::invalid_argument("multiplying elements of different colors");
    return act(op_.product(a.color), {a, b});
}

namespace {

void multisets(const std::vector<std::string>& labels, std::size_t n, std::size_t from, std::vector<std::string>& cur,
               std::vector<KnotWord>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::size_t i = from; i < labels.size(); ++i) {
        cur.push_back(labels[i]);
        multisets(labels, n - 1, i, cur, out);
        cur.pop_back();
    }
}

std::vector<KnotWord> multisets(const std::vector<std::string>& labels, std::size_t n) {
    std::vector<KnotWord> out;
    std::vector<std::string> cur;
    multisets(labels, n, 0, cur, out);
    return out;
}

std::vector<std::vector<std::string>> words(const std::vector<std::string>& labels, std::size_t n) {
    std::vector<std::vector<std::string>> out;
    std::vector<const std::vector<std::string>*> choices(n, &labels);
    for_each_tuple<std::string>(choices, [&](const std::vector<std::string>& w) { out.push_back(w); });
    return out;
}

}  // namespace

std::vector<SclNormalForm> NormalFormAlgebra::elements(Color c, std::size_t max_size) const {
    std::vector<SclNormalForm> out;
    if (c != Color::o) {
        for (std::size_t n = 0; n <= max_size; ++n)
            for (auto& k : multisets(gens_.of(c), n)) {
                SclNormalForm e = unit(c);
                e.central[slot(c)] = std::move(k);
                out.push_back(std::move(e));
            }
        std::sort(out.begin(), out.end());
        return out;
    }
    for (std::size_t a = 0; a <= max_size; ++a)
        for (std::size_t b = 0; a + b <= max_size; ++b)
            for (std::size_t cc = 0; a + b + cc <= max_size; ++cc)
                for (std::size_t d = 0; a + b + cc + d <= max_size; ++d)
                    for (const auto& w : words(gens_.of(Color::o), a))
                        for (const auto& kb : multisets(gens_.of(Color::up), b))
                            for (const auto& kc : multisets(gens_.of(Color::down), cc))
                                for (const auto& kd : multisets(gens_.of(Color::updown), d))
                                    out.push_back({Color::o, w, {kb, kc, kd}});
    std::sort(out.begin(), out.end());
    return out;
}

SclNormalForm NormalFormAlgebra::evaluate(const FreeElement& e) const {
    std::vector<SclNormalForm> xs;
    for (std::size_t j = 0; j < e.inputs.size(); ++j) xs.push_back(generator(e.op.inputs[j], e.inputs[j]));
    return act(e.op, xs);
}

SclNormalForm to_normal_form(const LinkNormalForm& l) {
    if (l.braid != 0) throw std::invalid_argument("only braid-free links lie in the free algebra carrier");
    return {Color::o, l.qword, l.central};
}

LinkNormalForm to_link_form(const SclNormalForm& nf) {
    if (nf.color != Color::o) throw std::invalid_argument("only the o color carries links");
    LinkNormalForm l;
    l.qword = nf.word;
    l.central = nf.central;
    return l;
}

namespace {

// Keeps a two-sided map between component keys and normal forms, recording conflicts.
template <class Key>
struct Matcher {
    std::map<Key, SclNormalForm> forward;
    std::map<SclNormalForm, Key> backward;

    void add(const Key& k, const SclNormalForm& nf, Pi0Report& rep, const std::string& what) {
        auto [f, fnew] = forward.emplace(k, nf);
        if (!fnew && !(f->second == nf)) rep.failures.push_back(what + " maps to two normal forms: " + f->second.str() +
                                                                 " and " + nf.str());
        auto [b, bnew] = backward.emplace(nf, k);
        if (!bnew && !(b->second == k)) rep.failures.push_back("two components map to " + nf.str());
    }

    void require_onto(const std::vector<SclNormalForm>& all, Pi0Report& rep) {
        rep.normal_forms += all.size();
        for (const auto& nf : all)
            if (!backward.count(nf)) rep.failures.push_back("normal form " + nf.str() + " is not hit");
    }
};

std::string describe(const FreeElement& e) {
    std::ostringstream os;
    os << to_string(e.op.output) << "(";
    for (std::size_t j = 0; j < e.inputs.size(); ++j) os << (j ? "," : "") << to_string(e.op.inputs[j]) << ":" << e.inputs[j];
    os << ";";
    for (auto r : e.op.rank) os << ' ' << r + 1;
    os << ")";
    return os.str();
}

constexpr std::size_t kMaxFailures = 20;

void trim_failures(Pi0Report& r) {
    if (r.failures.size() > kMaxFailures) r.failures.resize(kMaxFailures);
}

}  // namespace

Pi0Report compare_free_models(OperadKind kind, const Generators& gens, std::size_t max_arity) {
    Pi0Operad op(kind);
    FreeAlgebra free(op, gens);
    NormalFormAlgebra nf(op, gens);
    Pi0Report rep;
    rep.name = std::string("free models ") + to_string(kind);
    std::map<Color, std::vector<FreeElement>> elems;

    for (auto c : op.colors()) {
        elems[c] = free.elements(c, max_arity);
        Matcher<FreeElement> m;
        for (const auto& e : elems[c]) {
            auto image = nf.evaluate(e);
            m.add(e, image, rep, describe(e));
            for (const auto& s : all_perms(e.op.arity())) {
                ++rep.elements;
                FreeElement raw{op.act(e.op, s), permuted(e.inputs, s)};
                if (!(free.normalize(raw) == e)) rep.failures.push_back("orbit not closed at " + describe(raw));
                if (!(nf.evaluate(raw) == image)) rep.failures.push_back("not constant on the orbit of " + describe(e));
            }
        }
        rep.components += elems[c].size();
        m.require_onto(nf.elements(c, max_arity), rep);
    }

    // binary action tables
    auto cs = op.colors();
    for (auto c : cs)
        for (const auto& t : color_tuples(cs, 2))
            for (const auto& a : op.operations(t, c))
                for (const auto& x : elems[t[0]])
                    for (const auto& y : elems[t[1]]) {
                        if (x.inputs.size() + y.inputs.size() > max_arity) continue;
                        auto lhs = nf.evaluate(free.act(a, {x, y}));
                        auto rhs = nf.act(a, {nf.evaluate(x), nf.evaluate(y)});
                        if (!(lhs == rhs)) rep.failures.push_back("action table differs at " + describe(x) + " * " + describe(y));
                    }
    trim_failures(rep);
    return rep;
}

namespace {

AffineInc onto(const Rational& lo, const Rational& hi) { return AffineInc((hi - lo) / Rational(2), (hi + lo) / Rational(2)); }

// x-slot p of k, optionally only its left half
AffineInc x_slot(std::size_t p, std::size_t k, bool narrow) {
    Rational lo = Rational(2 * static_cast<std::int64_t>(p), static_cast<std::int64_t>(k)) - Rational(1);
    Rational hi = lo + Rational(2, static_cast<std::int64_t>(k));
    if (narrow) hi = (lo + hi) / Rational(2);
    return onto(lo, hi);
}

// Representatives of every component profile: for each arity and left-to-right order, two sizes.
struct GeoRep {
    Pi0Op op;
    std::vector<Pi0Op> permuted;  // pi0_op of the geometrically permuted object, indexed like all_perms
};

std::vector<GeoRep> cube_reps(OperadKind kind, std::size_t k) {
    std::vector<GeoRep> out;
    auto perms = all_perms(k);
    for (const auto& order : perms)
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<LittleCube> cubes(k, LittleCube::identity(kind == OperadKind::As ? 1 : 2));
            for (std::size_t p = 0; p < k; ++p) {
                if (kind == OperadKind::As) {
                    cubes[order[p]] = LittleCube({x_slot(p, k, variant == 1)});
                } else if (variant == 0) {
                    cubes[order[p]] = LittleCube({x_slot(p, k, false), AffineInc()});
                } else {
                    cubes[order[p]] = LittleCube({AffineInc(), x_slot(p, k, true)});
                }
            }
            CubeConfig l(kind == OperadKind::As ? 1 : 2, std::move(cubes), CubeMode::disjoint);
            GeoRep r{pi0_op(l), {}};
            for (const auto& s : perms) r.permuted.push_back(pi0_op(cube_sigma(l, s)));
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<GeoRep> scl_reps(const std::vector<Color>& t, Color output) {
    std::vector<GeoRep> out;
    const std::size_t k = t.size();
    auto perms = all_perms(k);
    const Rational zero(0), one(1), half(1, 2);
    for (const auto& order : perms)
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<LittleCube> cubes(k, LittleCube::identity(2));
            for (std::size_t p = 0; p < k; ++p) {
                std::size_t j = order[p];
                AffineInc x = x_slot(p, k, variant == 1);
                AffineInc y;
                if (output != Color::o)
                    y = variant == 0 ? AffineInc() : onto(-half, one);
                else if (t[j] == Color::o)
                    y = onto(-one, variant == 0 ? zero : -half);
                else
                    y = onto(variant == 0 ? zero : -half, one);
                cubes[j] = LittleCube({x, y});
            }
            SclElement e(t, output, std::move(cubes));
            GeoRep r{pi0_op(e), {}};
            for (const auto& s : perms) r.permuted.push_back(pi0_op(scl_sigma(e, s)));
            out.push_back(std::move(r));
        }
    return out;
}

}  // namespace

Pi0Report pi0_of_free(OperadKind kind, const Generators& gens, std::size_t max_arity) {
    Pi0Operad op(kind);
    FreeAlgebra free(op, gens);
    NormalFormAlgebra nf(op, gens);
    Pi0Report rep;
    rep.name = std::string("pi0 of free ") + to_string(kind);
    const auto& g = free.generators();

    for (auto c : op.colors()) {
        Matcher<FreeElement> m;
        for (std::size_t k = 0; k <= max_arity; ++k) {
            auto perms = all_perms(k);
            std::vector<std::pair<std::vector<Color>, std::vector<GeoRep>>> profiles;
            if (kind != OperadKind::Pi0SCL) {
                profiles.push_back({std::vector<Color>(k, c), cube_reps(kind, k)});
            } else {
                for (const auto& t : color_tuples(op.colors(), k)) {
                    if (!op.operations(t, c).size()) continue;
                    profiles.push_back({t, scl_reps(t, c)});
                }
            }
            for (const auto& [t, reps] : profiles) {
                std::vector<const std::vector<std::string>*> choices;
                for (auto col : t) choices.push_back(&g.of(col));
                for (const auto& r : reps)
                    for_each_tuple<std::string>(choices, [&](const std::vector<std::string>& xs) {
                        ++rep.elements;
                        FreeElement geo{r.op, xs};
                        for (std::size_t si = 0; si < perms.size(); ++si) {
                            FreeElement cand{r.permuted[si], permuted(xs, perms[si])};
                            if (cand < geo) geo = std::move(cand);
                        }
                        FreeElement sym = free.normalize({r.op, xs});
                        if (!(geo == sym))
                            rep.failures.push_back("geometric orbit " + describe(geo) + " differs from " + describe(sym));
                        m.add(geo, nf.evaluate({r.op, xs}), rep, describe(geo));
                    });
            }
        }
        rep.components += m.forward.size();
        m.require_onto(nf.elements(c, max_arity), rep);
    }
    trim_failures(rep);
    return rep;
}

Pi0Report compare_link_monoid(const std::vector<std::string>& link_labels, const std::vector<std::string>& knot_labels,
                              std::size_t max_size) {
    Generators gens;
    gens.of(Color::o) = link_labels;
    for (auto s : kClosedColors) gens.of(s) = knot_labels;
    return compare_link_monoid(link_labels, knot_labels, max_size, gens);
}

Pi0Report compare_link_monoid(const std::vector<std::string>& link_labels, const std::vector<std::string>& knot_labels,
                              std::size_t max_size, const Generators& gens) {
    Pi0Operad op(OperadKind::Pi0SCL);
    NormalFormAlgebra nf(op, gens);
    Pi0Report rep;
    rep.name = "link monoid";

    // links generated by letters and phi images
    std::vector<LinkNormalForm> letters;
    for (const auto& q : link_labels) letters.push_back(link_letter(q));
    for (auto s : kClosedColors)
        for (const auto& k : knot_labels) letters.push_back(phi(s, KnotWord({k})));
    std::set<LinkNormalForm> links{LinkNormalForm{}};
    std::vector<LinkNormalForm> frontier{LinkNormalForm{}};
    for (std::size_t n = 0; n < max_size; ++n) {
        std::vector<LinkNormalForm> next;
        for (const auto& l : frontier)
            for (const auto& x : letters) {
                auto y = link_mul(l, x);
                if (links.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    rep.elements = links.size();

    Matcher<LinkNormalForm> m;
    for (const auto& l : links) {
        auto image = to_normal_form(l);
        m.add(l, image, rep, l.str());
        if (!(to_link_form(image) == l)) rep.failures.push_back("round trip fails for " + l.str());
    }
    rep.components = m.forward.size();
    m.require_onto(nf.elements(Color::o, max_size), rep);

    auto size = [](const LinkNormalForm& l) { return to_normal_form(l).size(); };
    for (const auto& a : links)
        for (const auto& b : links) {
            if (size(a) + size(b) > max_size) continue;
            auto lhs = to_normal_form(link_mul(a, b));
            if (!(lhs == nf.mul(to_normal_form(a), to_normal_form(b))))
                rep.failures.push_back("multiplication differs at " + a.str() + " * " + b.str());
        }
    for (const auto& a : links)
        for (auto s : kClosedColors)
            for (const auto& k : knot_labels) {
                if (size(a) + 1 > max_size) continue;
                Pi0Op left{{Color::o, s}, Color::o, {0}};
                auto lhs = to_normal_form(link_mul(a, phi(s, KnotWord({k}))));
                if (!(lhs == nf.act(left, {to_normal_form(a), nf.generator(s, k)})))
                    rep.failures.push_back("phi action differs at " + a.str());
            }
    trim_failures(rep);
    return rep;
}

}  // namespace scl
