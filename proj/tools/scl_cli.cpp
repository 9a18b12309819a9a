// scl: command-line access to the cube operads, the actions on fat knots and links,
// the invariants, the pi0 monoids, the check suites and SVG rendering.
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scl/actions.hpp"
#include "scl/checks.hpp"
#include "scl/config_io.hpp"
#include "scl/invariants.hpp"
#include "scl/monoids.hpp"
#include "scl/ordering.hpp"
#include "scl/presentation.hpp"
#include "scl/render.hpp"

using namespace scl;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kParseFailure = 2;
constexpr int kInvalid = 3;

// Raised for malformed command arguments that CLI11 cannot catch (e.g. a bad permutation).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) { return parse_json_text(read_text(path)); }

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write '" + out + "'");
}

void emit_json(const json& j, const std::string& out) { emit(j.dump() + "\n", out); }

// "2,1,3" -> {1,0,2}
std::vector<std::size_t> one_based_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("'" + s + "' is not a comma-separated list of positive integers");
        }
        if (used != item.size() || v < 1) throw UsageError("'" + s + "' is not a comma-separated list of positive integers");
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

json one_based(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x + 1);
    return a;
}

Perm perm_arg(const std::string& s) {
    auto p = one_based_list(s);
    if (!is_perm(p)) throw UsageError("'" + s + "' is not a permutation");
    return p;
}

OrderDirection direction_arg(const std::string& s) {
    if (s == "standard") return OrderDirection::standard;
    if (s == "reverse") return OrderDirection::reverse;
    throw UsageError("direction must be 'standard' or 'reverse'");
}

json pi0_json(const Pi0Class& c) {
    if (c.kind == Pi0Class::Kind::point) return json("point");
    return json{{"perm", one_based(c.order)}};
}

json diagnostics_json(const DiagnosticReport& d) {
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    return json{{"min_separation", opt(d.min_separation)},
                {"min_self_separation", opt(d.min_self_separation)},
                {"resolution", d.resolution},
                {"segments", d.segments},
                {"certified", d.certified()}};
}

double resolution_of(const Presentation& p, double tol) {
    return std::visit([tol](const auto& x) { return invariant_resolution(x, tol); }, p);
}

// `tol` should be a certified resolution (see resolution_of).
json invariants_json(const Presentation& p, double tol) {
    if (auto* k = std::get_if<FatKnot>(&p))
        return json{{"kind", "knot"}, {"framing", framing_number(*k, tol)}, {"diagnostics", diagnostics_json(diagnostics(*k, tol))}};
    const auto& l = std::get<FatLink>(p);
    auto [fu, fl] = framing_pair(l, tol);
    return json{{"kind", "link"},
                {"lk", linking_of_strands(l, tol)},
                {"framing", {fu, fl}},
                {"diagnostics", diagnostics_json(diagnostics(l, tol))}};
}

// Writes the presentation to `out` (or embeds it) and prints the invariants.
// Materialized at the resolution that certifies the invariants, so they survive a re-read.
void emit_presentation(const Presentation& p, const std::string& out, double tol) {
    tol = resolution_of(p, tol);
    json report = invariants_json(p, tol);
    if (out.empty()) {
        report["presentation"] = to_json(p, tol);
    } else {
        emit_json(to_json(p, tol), out);
        report["out"] = out;
    }
    emit_json(report, "");
}

template <class T>
std::vector<T> inputs_of_kind(const std::vector<std::string>& refs, const char* want) {
    std::vector<T> out;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        auto p = load_presentation(refs[i]);
        if (!std::holds_alternative<T>(p))
            throw KindMismatch("input " + std::to_string(i + 1) + " ('" + refs[i] + "') is not a " + want);
        out.push_back(std::get<T>(p));
    }
    return out;
}

Alphabets alphabet_arg(const std::vector<std::string>& specs) {
    Alphabets a;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--alphabet expects knots=LABELS or links=LABELS");
        std::set<std::string> labels;
        std::stringstream ss(s.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) {
                if (!is_label(item)) throw WordSyntaxError("'" + item + "' is not a valid label");
                labels.insert(item);
            }
        auto key = s.substr(0, eq);
        if (key == "knots") a.knot = labels;
        else if (key == "links") a.link = labels;
        else throw UsageError("--alphabet expects knots=LABELS or links=LABELS");
    }
    return a;
}

bool is_link_word(const std::string& w) {
    auto p = w.find_first_not_of(" \t");
    return p != std::string::npos && w[p] == '[';
}

struct Options {
    std::string a, b, out, direction = "standard", perm, order;
    std::vector<std::string> files, words, alphabet, suites;
    std::size_t at = 0;
    double tol = kChordTolerance;
    TrialConfig check;
    std::string mutation = "none";
    std::int64_t braid = 0;
    std::string color;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swiss-cheese operad for string links: cube operads, actions, invariants, pi0 monoids"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> run;

    // cube
    auto* cube = app.add_subcommand("cube", "little cubes configurations")->require_subcommand(1);
    {
        auto* v = cube->add_subcommand("validate", "check a configuration file");
        v->add_option("file", o.a, "configuration JSON, or - for stdin")->required();
        v->callback([&] {
            run = [&] {
                try {
                    config_from_json(read_json(o.a));
                } catch (const ValidationError& e) {
                    emit_json(json{{"ok", false}, {"error", e.what()}}, "");
                    return kInvalid;
                }
                emit_json(json{{"ok", true}}, "");
                return kOk;
            };
        });
        auto* c = cube->add_subcommand("compose", "L o_i P");
        c->add_option("outer", o.a)->required();
        c->add_option("inner", o.b)->required();
        c->add_option("--at", o.at, "input of the outer configuration (1-based)")->required()->check(CLI::PositiveNumber);
        c->add_option("--out", o.out, "output file (default stdout)");
        c->callback([&] {
            run = [&] {
                auto l = config_from_json(read_json(o.a));
                auto p = config_from_json(read_json(o.b));
                if (o.at > l.arity()) throw ValidationError("--at " + std::to_string(o.at) + " exceeds the arity " + std::to_string(l.arity()));
                emit_json(config_to_json(cube_compose_at(l, o.at - 1, p)), o.out);
                return kOk;
            };
        });
        auto* p = cube->add_subcommand("pi0", "connected component: a permutation or a point");
        p->add_option("file", o.a)->required();
        p->callback([&] {
            run = [&] {
                auto l = config_from_json(read_json(o.a));
                emit_json(pi0_json(pi0_class(l.mode() == CubeMode::disjoint ? l : l.with_mode(CubeMode::disjoint))), "");
                return kOk;
            };
        });
        auto* s = cube->add_subcommand("sigma", "right action by a permutation");
        s->add_option("file", o.a)->required();
        s->add_option("--perm", o.perm, "comma-separated, 1-based")->required();
        s->add_option("--out", o.out);
        s->callback([&] {
            run = [&] {
                auto l = config_from_json(read_json(o.a));
                auto sigma = perm_arg(o.perm);
                if (sigma.size() != l.arity()) throw ValidationError("permutation size differs from the arity");
                emit_json(config_to_json(cube_sigma(l, sigma)), o.out);
                return kOk;
            };
        });
        auto* r = cube->add_subcommand("order", "ordering permutations of a 2-dimensional configuration");
        r->add_option("file", o.a)->required();
        r->add_option("--direction", o.direction)->check(CLI::IsMember({"standard", "reverse"}));
        r->callback([&] {
            run = [&] {
                auto l = config_from_json(read_json(o.a));
                if (l.dim() != 2) throw ValidationError("ordering needs a 2-dimensional configuration");
                if (l.mode() != CubeMode::disjoint) l = l.with_mode(CubeMode::disjoint);
                auto dir = direction_arg(o.direction);
                json all = json::array();
                for (const auto& sigma : ordering_permutations(l, dir)) all.push_back(one_based(sigma));
                emit_json(json{{"orderings", all}, {"canonical", one_based(canonical_ordering(l, dir))}}, "");
                return kOk;
            };
        });
    }

    // scl
    auto* scl_cmd = app.add_subcommand("scl", "operations of the Swiss-cheese operad for links")->require_subcommand(1);
    {
        auto* v = scl_cmd->add_subcommand("validate", "check an SCL element file");
        v->add_option("file", o.a)->required();
        v->callback([&] {
            run = [&] {
                try {
                    scl_from_json(read_json(o.a));
                } catch (const ValidationError& e) {
                    emit_json(json{{"ok", false}, {"error", e.what()}}, "");
                    return kInvalid;
                }
                emit_json(json{{"ok", true}}, "");
                return kOk;
            };
        });
        auto* c = scl_cmd->add_subcommand("compose", "A o_i B");
        c->add_option("outer", o.a)->required();
        c->add_option("inner", o.b)->required();
        c->add_option("--at", o.at, "input of the outer element (1-based)")->required()->check(CLI::PositiveNumber);
        c->add_option("--out", o.out);
        c->callback([&] {
            run = [&] {
                auto a = scl_from_json(read_json(o.a));
                auto b = scl_from_json(read_json(o.b));
                if (o.at > a.arity()) throw ValidationError("--at " + std::to_string(o.at) + " exceeds the arity " + std::to_string(a.arity()));
                emit_json(scl_to_json(scl_compose_at(a, o.at - 1, b)), o.out);
                return kOk;
            };
        });
        auto* p = scl_cmd->add_subcommand("pi0", "component: ordering of the o-cubes, or a point");
        p->add_option("file", o.a)->required();
        p->callback([&] {
            run = [&] {
                emit_json(pi0_json(pi0_class_scl(scl_from_json(read_json(o.a)))), "");
                return kOk;
            };
        });
        auto* s = scl_cmd->add_subcommand("sort", "canonical color-sorting");
        s->add_option("file", o.a)->required();
        s->callback([&] {
            run = [&] {
                auto e = scl_from_json(read_json(o.a));
                auto alpha = color_sort(e.inputs());
                json j = json::object();
                for (auto c : kAllColors) j[to_string(c)] = one_based(alpha.of(c));
                emit_json(j, "");
                return kOk;
            };
        });
    }

    // act
    auto* act = app.add_subcommand("act", "apply kappa, lambda or mu to presentations")->require_subcommand(1);
    {
        auto common = [&](CLI::App* c, const char* cfg_help) {
            c->add_option("config", o.a, cfg_help)->required();
            c->add_option("inputs", o.files, "presentations: file, - or catalog:NAME");
            c->add_option("--out", o.out, "write the resulting presentation here");
            c->add_option("--tolerance", o.tol, "chord tolerance for materialized tubes")->check(CLI::PositiveNumber);
        };
        auto* k = act->add_subcommand("kappa", "little 2-cubes acting on fat long knots");
        common(k, "2-dimensional configuration");
        k->add_option("--direction", o.direction)->check(CLI::IsMember({"standard", "reverse"}));
        k->add_option("--order", o.order, "explicit ordering permutation (1-based)");
        k->callback([&] {
            run = [&] {
                auto l = config_from_json(read_json(o.a));
                auto knots = inputs_of_kind<FatKnot>(o.files, "knot");
                auto dir = direction_arg(o.direction);
                FatKnot r = o.order.empty() ? kappa_act(l, knots, dir) : kappa_act(l, knots, perm_arg(o.order), dir);
                emit_presentation(r, o.out, o.tol);
                return kOk;
            };
        });
        auto* lm = act->add_subcommand("lambda", "little intervals acting on fat string links");
        common(lm, "1-dimensional configuration");
        lm->callback([&] {
            run = [&] {
                auto l = config_from_json(read_json(o.a));
                emit_presentation(lambda_act(l, inputs_of_kind<FatLink>(o.files, "link")), o.out, o.tol);
                return kOk;
            };
        });
        auto* mu = act->add_subcommand("mu", "the Swiss-cheese action");
        common(mu, "SCL element");
        mu->callback([&] {
            run = [&] {
                auto e = scl_from_json(read_json(o.a));
                std::vector<Presentation> in;
                for (const auto& f : o.files) in.push_back(load_presentation(f));
                emit_presentation(mu_act(e, in), o.out, o.tol);
                return kOk;
            };
        });
    }

    // invariant
    auto* inv = app.add_subcommand("invariant", "framing, linking number and embedding diagnostics");
    inv->add_option("inputs", o.files, "presentations: file, - or catalog:NAME")->required();
    inv->add_option("--tolerance", o.tol)->check(CLI::PositiveNumber);
    inv->callback([&] {
        run = [&] {
            for (const auto& f : o.files) {
                auto p = load_presentation(f);
                auto j = invariants_json(p, resolution_of(p, o.tol));
                j["input"] = f;
                emit_json(j, "");
            }
            return kOk;
        };
    });

    // monoid
    auto* mon = app.add_subcommand("monoid", "knot words and link normal forms")->require_subcommand(1);
    {
        auto alphabet = [&](CLI::App* c) {
            c->add_option("--alphabet", o.alphabet, "knots=L1,L2 or links=Q1,Q2 (repeatable)");
        };
        auto* m = mon->add_subcommand("mul", "product of words of one kind");
        m->add_option("words", o.words)->required()->expected(1, -1);
        alphabet(m);
        m->callback([&] {
            run = [&] {
                auto alpha = alphabet_arg(o.alphabet);
                bool links = is_link_word(o.words.front());
                for (const auto& w : o.words)
                    if (is_link_word(w) != links) throw WordSyntaxError("cannot multiply a knot word with a link word");
                if (links) {
                    LinkNormalForm acc;
                    for (const auto& w : o.words) acc = link_mul(acc, LinkNormalForm::parse(w), alpha);
                    std::cout << acc.str() << "\n";
                } else {
                    KnotWord acc;
                    for (const auto& w : o.words) acc = knot_mul(acc, KnotWord::parse(w), alpha);
                    std::cout << acc.str() << "\n";
                }
                return kOk;
            };
        });
        auto* p = mon->add_subcommand("phi", "the central link of a knot word on strand up, down or updown");
        p->add_option("color", o.color)->required()->check(CLI::IsMember({"up", "down", "updown"}));
        p->add_option("word", o.a)->required();
        alphabet(p);
        p->callback([&] {
            run = [&] {
                auto alpha = alphabet_arg(o.alphabet);
                auto k = KnotWord::parse(o.a);
                alpha.check(k);
                std::cout << phi(color_from_string(o.color), k).str() << "\n";
                return kOk;
            };
        });
        auto* b = mon->add_subcommand("braid", "the n-th power of the braid generator");
        b->add_option("n", o.braid)->required();
        b->callback([&] {
            run = [&] {
                std::cout << braid_unit(o.braid).str() << "\n";
                return kOk;
            };
        });
        auto* n = mon->add_subcommand("normalize", "print a word in normal form");
        n->add_option("word", o.a)->required();
        alphabet(n);
        n->callback([&] {
            run = [&] {
                auto alpha = alphabet_arg(o.alphabet);
                if (is_link_word(o.a)) {
                    auto l = LinkNormalForm::parse(o.a);
                    alpha.check(l);
                    std::cout << l.str() << "\n";
                } else {
                    auto k = KnotWord::parse(o.a);
                    alpha.check(k);
                    std::cout << k.str() << "\n";
                }
                return kOk;
            };
        });
    }

    // check
    auto* chk = app.add_subcommand("check", "seeded property suites; one JSON line per property");
    chk->add_option("suites", o.suites, "c1 c2 scl ordering kappa pi0 mu (default: all)")
        ->check(CLI::IsMember(suite_names()));
    chk->add_option("--seed", o.check.seed);
    chk->add_option("--trials", o.check.trials)->check(CLI::PositiveNumber);
    chk->add_option("--first-trial", o.check.first_trial, "index of the first trial, for replaying a failure");
    chk->add_option("--max-arity", o.check.max_arity)->check(CLI::PositiveNumber);
    chk->add_option("--tolerance", o.check.tolerance, "pointwise tolerance for geometric agreement")
        ->check(CLI::PositiveNumber);
    chk->add_option("--mutation", o.mutation, "inject a known defect (harness self-test)");
    chk->callback([&] {
        run = [&] {
            o.check.mutation = mutation_from_string(o.mutation);
            auto suites = o.suites.empty() ? suite_names() : o.suites;
            bool ok = true;
            for (const auto& s : suites) {
                auto r = run_suite(s, o.check);
                for (const auto& line : r.lines()) std::cout << line.dump() << "\n";
                ok = ok && r.ok();
            }
            return ok ? kOk : kInvalid;
        };
    });

    // render
    auto* ren = app.add_subcommand("render", "SVG figures")->require_subcommand(1);
    {
        auto* c = ren->add_subcommand("cubes", "boxes of a configuration or SCL element");
        c->add_option("file", o.a)->required();
        c->add_option("--out", o.out, "SVG file (default stdout)");
        c->callback([&] {
            run = [&] {
                auto j = read_json(o.a);
                emit(j.is_object() && j.contains("colors") ? render_scl(scl_from_json(j)) : render_cubes(config_from_json(j)),
                     o.out);
                return kOk;
            };
        });
        auto* d = ren->add_subcommand("diagram", "projection of a knot or link");
        d->add_option("input", o.a, "presentation: file, - or catalog:NAME")->required();
        d->add_option("--out", o.out, "SVG file (default stdout)");
        d->add_option("--tolerance", o.tol)->check(CLI::PositiveNumber);
        d->callback([&] {
            run = [&] {
                emit(render_diagram(load_presentation(o.a), o.tol), o.out);
                return kOk;
            };
        });
    }

    // CLI11 reads a "[...]" argument of a list option as the list itself; link words are
    // trimmed when parsed, so a leading space keeps them whole
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args.front() == "monoid")
        for (auto& a : args)
            if (a.size() >= 2 && a.front() == '[' && a.back() == ']') a.insert(a.begin(), ' ');
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseFailure;
    }

    try {
        return run ? run() : kParseFailure;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const WordSyntaxError& e) {
        std::cerr << "word syntax error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const GeometryError& e) {
        std::cerr << "invalid geometry: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
