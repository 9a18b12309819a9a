#include "scl/fat.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numbers>
#include <string>

namespace scl {

const char* to_string(Strand s) { return s == Strand::upper ? "upper" : "lower"; }

Point3 iota(Strand s, const Point3& p) {
    return {p.x, p.y / 8, (s == Strand::upper ? 0.5 : -0.5) + p.z / 8};
}

namespace detail {

struct KnotNode {
    virtual ~KnotNode() = default;
    virtual Point3 apply(const Point3& p) const = 0;
    virtual void breakpoints(std::vector<double>& out) const = 0;
    virtual const Tube* leaf() const { return nullptr; }
};

struct LinkNode {
    virtual ~LinkNode() = default;
    virtual Point3 apply(Strand s, const Point3& p) const = 0;
    virtual void breakpoints(std::vector<double>& out) const = 0;
    virtual const Tube* leaf(Strand) const { return nullptr; }
};

}  // namespace detail

namespace {

using detail::KnotNode;
using detail::LinkNode;

// Per-vertex frame of a tube: image of disc point x is c + rho (x1 m + x2 n).
class Frames {
public:
    explicit Frames(const Tube& tube) : t_(tube.core.t) {
        const auto& c = tube.core.p;
        const auto& q = tube.pushoff.p;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point3 d = q[i] - c[i];
            double rho = norm(d);
            if (!(rho > 0)) throw GeometryError("pushoff meets the core at parameter " + std::to_string(t_[i]));
            Point3 nn = d * (1 / rho);
            Point3 tan = (i == 0 || i + 1 == n) ? Point3{1, 0, 0} : c[i + 1] - c[i - 1];
            double tl = norm(tan);
            if (!(tl > 0)) throw GeometryError("core tangent vanishes at parameter " + std::to_string(t_[i]));
            Point3 m = cross(nn, tan * (1 / tl));
            double ml = norm(m);
            if (ml < 1e-9) throw GeometryError("degenerate frame: tangent parallel to the pushoff direction at parameter " +
                                               std::to_string(t_[i]));
            c_.push_back(c[i]);
            m_.push_back(m * (rho / ml));
            n_.push_back(d);
        }
    }

    bool covers(double t) const { return t > t_.front() && t < t_.back(); }

    Point3 at(double t, double x1, double x2) const {
        auto it = std::upper_bound(t_.begin(), t_.end(), t);
        std::size_t i = std::min(static_cast<std::size_t>(it - t_.begin()) - 1, t_.size() - 2);
        double w = (t - t_[i]) / (t_[i + 1] - t_[i]);
        Point3 a = c_[i] + m_[i] * x1 + n_[i] * x2;
        Point3 b = c_[i + 1] + m_[i + 1] * x1 + n_[i + 1] * x2;
        return lerp(a, b, w);
    }

    const std::vector<double>& params() const { return t_; }

private:
    std::vector<double> t_;
    std::vector<Point3> c_, m_, n_;  // m_ and n_ already scaled by rho
};

struct TubeKnot final : KnotNode {
    Tube tube;
    Frames frames;
    explicit TubeKnot(Tube t) : tube(std::move(t)), frames(tube) {}
    Point3 apply(const Point3& p) const override { return frames.covers(p.x) ? frames.at(p.x, p.y, p.z) : p; }
    void breakpoints(std::vector<double>& out) const override {
        out.insert(out.end(), tube.core.t.begin(), tube.core.t.end());
    }
    const Tube* leaf() const override { return &tube; }
};

struct ConjKnot final : KnotNode {
    double a, b;
    FatKnot inner;
    ConjKnot(const AffineInc& L, FatKnot f) : a(L.scale().to_double()), b(L.offset().to_double()), inner(std::move(f)) {}
    Point3 apply(const Point3& p) const override {
        double u = (p.x - b) / a;
        if (!(std::abs(u) < 1)) return p;
        Point3 q = inner({u, p.y, p.z});
        return {a * q.x + b, q.y, q.z};
    }
    void breakpoints(std::vector<double>& out) const override {
        std::vector<double> in;
        inner.node().breakpoints(in);
        for (double s : in) out.push_back(a * s + b);
    }
};

struct ComposeKnot final : KnotNode {
    FatKnot g, f;
    ComposeKnot(FatKnot gg, FatKnot ff) : g(std::move(gg)), f(std::move(ff)) {}
    Point3 apply(const Point3& p) const override { return g(f(p)); }
    void breakpoints(std::vector<double>& out) const override {
        g.node().breakpoints(out);
        f.node().breakpoints(out);
    }
};

struct TubeLink final : LinkNode {
    std::array<Tube, 2> tubes;
    std::array<Frames, 2> frames;
    TubeLink(Tube up, Tube low)
        : tubes{std::move(up), std::move(low)}, frames{Frames(tubes[0]), Frames(tubes[1])} {}
    Point3 apply(Strand s, const Point3& p) const override {
        const auto& f = frames[static_cast<int>(s)];
        return f.covers(p.x) ? f.at(p.x, p.y, p.z) : iota(s, p);
    }
    void breakpoints(std::vector<double>& out) const override {
        for (const auto& t : tubes) out.insert(out.end(), t.core.t.begin(), t.core.t.end());
    }
    const Tube* leaf(Strand s) const override { return &tubes[static_cast<int>(s)]; }
};

struct Piece {
    double a, b, lo, hi;
    FatLink link;
};

struct ConcatLink final : LinkNode {
    std::vector<Piece> pieces;
    Point3 apply(Strand s, const Point3& p) const override {
        for (const auto& pc : pieces) {
            if (p.x < pc.lo || p.x > pc.hi) continue;
            double u = (p.x - pc.b) / pc.a;
            if (!(std::abs(u) < 1)) return iota(s, p);
            Point3 q = pc.link(s, {u, p.y, p.z});
            return {pc.a * q.x + pc.b, q.y, q.z};
        }
        return iota(s, p);
    }
    void breakpoints(std::vector<double>& out) const override {
        for (const auto& pc : pieces) {
            std::vector<double> in;
            pc.link.node().breakpoints(in);
            for (double s : in) out.push_back(pc.a * s + pc.b);
            out.push_back(pc.lo);
            out.push_back(pc.hi);
        }
    }
};

struct SandwichLink final : LinkNode {
    FatKnot outer;
    FatLink mid;
    std::array<FatKnot, 2> knots;
    SandwichLink(FatKnot o, FatLink m, FatKnot up, FatKnot down)
        : outer(std::move(o)), mid(std::move(m)), knots{std::move(up), std::move(down)} {}
    Point3 apply(Strand s, const Point3& p) const override {
        return outer(mid(s, knots[static_cast<int>(s)](p)));
    }
    void breakpoints(std::vector<double>& out) const override {
        outer.node().breakpoints(out);
        mid.node().breakpoints(out);
        for (const auto& k : knots) k.node().breakpoints(out);
    }
};

constexpr int kMaxDepth = 24;
// Chord error is also kept below this fraction of the local radius |pushoff - core|, so
// deeply rescaled tubes keep their pushoff off the core polyline.
constexpr double kRadiusFraction = 0.1;

// Chord-error-driven sampling of a core/pushoff pair between breakpoints.
Tube sample(const std::function<Point3(double)>& core, const std::function<Point3(double)>& push,
            std::vector<double> bps, double tol) {
    for (auto& s : bps) s = std::clamp(s, -1.0, 1.0);
    bps.push_back(-1.0);
    bps.push_back(1.0);
    std::sort(bps.begin(), bps.end());
    std::vector<double> grid;
    for (double s : bps)
        if (grid.empty() || s - grid.back() > 1e-12) grid.push_back(s);
    grid.back() = 1.0;

    Tube out;
    auto emit = [&](double t, const Point3& c, const Point3& p) {
        out.core.t.push_back(t);
        out.core.p.push_back(c);
        out.pushoff.t.push_back(t);
        out.pushoff.p.push_back(p);
    };
    auto chord_err = [](const Point3& a, const Point3& b, double w, const Point3& x) { return dist(lerp(a, b, w), x); };

    std::function<void(double, const Point3&, const Point3&, double, const Point3&, const Point3&, int)> refine =
        [&](double t0, const Point3& c0, const Point3& p0, double t1, const Point3& c1, const Point3& p1, int depth) {
            double tm = 0.5 * (t0 + t1);
            Point3 cm = core(tm), pm = push(tm);
            double err = std::max(chord_err(c0, c1, 0.5, cm), chord_err(p0, p1, 0.5, pm));
            const double local = std::min(tol, kRadiusFraction * std::min({dist(c0, p0), dist(cm, pm), dist(c1, p1)}));
            if (err <= local && depth < kMaxDepth) {
                for (double w : {0.25, 0.75}) {
                    double tq = t0 + w * (t1 - t0);
                    err = std::max({err, chord_err(c0, c1, w, core(tq)), chord_err(p0, p1, w, push(tq))});
                }
            }
            if (err > local && depth < kMaxDepth) {
                refine(t0, c0, p0, tm, cm, pm, depth + 1);
                refine(tm, cm, pm, t1, c1, p1, depth + 1);
            } else {
                emit(t1, c1, p1);
            }
        };

    Point3 c0 = core(grid[0]), p0 = push(grid[0]);
    emit(grid[0], c0, p0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Point3 c1 = core(grid[i + 1]), p1 = push(grid[i + 1]);
        refine(grid[i], c0, p0, grid[i + 1], c1, p1, 0);
        c0 = c1;
        p0 = p1;
    }
    return out;
}

void check_endpoint(const Point3& got, const Point3& want, const char* what) {
    if (dist(got, want) > 1e-9)
        throw GeometryError(std::string(what) + " must end at (" + std::to_string(want.x) + ", " + std::to_string(want.y) +
                            ", " + std::to_string(want.z) + ")");
}

void check_tube_shape(const Tube& t) {
    t.core.validate();
    t.pushoff.validate();
    if (t.core.t != t.pushoff.t) throw GeometryError("core and pushoff must share one parameter grid");
}

void check_inside(const Tube& t) {
    for (std::size_t i = 1; i + 1 < t.core.size(); ++i) {
        const auto& c = t.core.p[i];
        if (!(std::abs(c.x) < 1) || std::hypot(c.y, c.z) >= 1)
            throw GeometryError("core vertex " + std::to_string(i + 1) + " leaves the open cylinder");
        const auto& p = t.pushoff.p[i];
        if (std::abs(p.x) > 1 || std::hypot(p.y, p.z) > 1 + 1e-9)
            throw GeometryError("pushoff vertex " + std::to_string(i + 1) + " leaves the cylinder");
    }
}

}  // namespace

void validate_knot_tube(const Tube& t) {
    check_tube_shape(t);
    check_endpoint(t.core.p.front(), {-1, 0, 0}, "core");
    check_endpoint(t.core.p.back(), {1, 0, 0}, "core");
    check_endpoint(t.pushoff.p.front(), {-1, 0, 1}, "pushoff");
    check_endpoint(t.pushoff.p.back(), {1, 0, 1}, "pushoff");
    check_inside(t);
    (void)Frames(t);
}

void validate_link_tube(Strand s, const Tube& t) {
    check_tube_shape(t);
    const double zc = s == Strand::upper ? 0.5 : -0.5;
    check_endpoint(t.core.p.front(), {-1, 0, zc}, "strand core");
    check_endpoint(t.core.p.back(), {1, 0, zc}, "strand core");
    check_endpoint(t.pushoff.p.front(), {-1, 0, zc + 0.125}, "strand pushoff");
    check_endpoint(t.pushoff.p.back(), {1, 0, zc + 0.125}, "strand pushoff");
    check_inside(t);
    (void)Frames(t);
}

FatKnot FatKnot::from_tube(Tube tube) {
    validate_knot_tube(tube);
    return FatKnot(std::make_shared<TubeKnot>(std::move(tube)));
}

Point3 FatKnot::operator()(const Point3& p) const { return node_->apply(p); }

bool FatKnot::is_leaf() const { return node_->leaf() != nullptr; }

Tube FatKnot::tube(double tol) const {
    if (auto* t = node_->leaf()) return *t;
    std::vector<double> bps;
    node_->breakpoints(bps);
    return sample([&](double t) { return (*this)({t, 0, 0}); }, [&](double t) { return (*this)({t, 0, 1}); },
                  std::move(bps), tol);
}

FatLink FatLink::from_tubes(Tube upper, Tube lower) {
    validate_link_tube(Strand::upper, upper);
    validate_link_tube(Strand::lower, lower);
    return FatLink(std::make_shared<TubeLink>(std::move(upper), std::move(lower)));
}

Point3 FatLink::operator()(Strand s, const Point3& p) const { return node_->apply(s, p); }

bool FatLink::is_leaf() const { return node_->leaf(Strand::upper) != nullptr; }

Tube FatLink::tube(Strand s, double tol) const {
    if (auto* t = node_->leaf(s)) return *t;
    std::vector<double> bps;
    node_->breakpoints(bps);
    return sample([&](double t) { return (*this)(s, {t, 0, 0}); }, [&](double t) { return (*this)(s, {t, 0, 1}); },
                  std::move(bps), tol);
}

namespace {

Tube straight(double z0) {
    Tube t;
    t.core = {{-1, 1}, {{-1, 0, z0}, {1, 0, z0}}};
    double dz = z0 == 0 ? 1 : 0.125;
    t.pushoff = {{-1, 1}, {{-1, 0, z0 + dz}, {1, 0, z0 + dz}}};
    return t;
}

}  // namespace

FatKnot standard_knot() { return FatKnot::from_tube(straight(0)); }

FatLink standard_link() { return FatLink::from_tubes(straight(0.5), straight(-0.5)); }

FatKnot twist(int n) {
    if (n == 0) return standard_knot();
    const int segs = 32 * std::abs(n);
    Tube t;
    for (int i = 0; i <= segs; ++i) {
        double s = i == segs ? 1.0 : -1.0 + 2.0 * i / segs;
        double th = n * std::numbers::pi * (s + 1);
        t.core.t.push_back(s);
        t.core.p.push_back({s, 0, 0});
        t.pushoff.t.push_back(s);
        t.pushoff.p.push_back(i == segs ? Point3{1, 0, 1} : Point3{s, -std::sin(th), std::cos(th)});
    }
    return FatKnot::from_tube(std::move(t));
}

Point3 evaluate(const FatKnot& f, double t, double x1, double x2) { return f({t, x1, x2}); }

Point3 evaluate(const FatLink& l, Strand s, double t, double x1, double x2) { return l(s, {t, x1, x2}); }

FatKnot cube1_conjugate(const AffineInc& L, const FatKnot& f) { return FatKnot(std::make_shared<ConjKnot>(L, f)); }

FatLink cube1_conjugate(const AffineInc& L, const FatLink& l) { return concatenate({{L, l}}); }

FatKnot compose(const FatKnot& g, const FatKnot& f) { return FatKnot(std::make_shared<ComposeKnot>(g, f)); }

FatLink concatenate(const std::vector<std::pair<AffineInc, FatLink>>& pieces) {
    auto node = std::make_shared<ConcatLink>();
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (!(pieces[i].first.hi() <= pieces[j].first.lo() || pieces[j].first.hi() <= pieces[i].first.lo()))
                throw ValidationError("concatenated intervals must be almost disjoint");
    for (const auto& [L, l] : pieces)
        node->pieces.push_back({L.scale().to_double(), L.offset().to_double(), L.lo().to_double(), L.hi().to_double(), l});
    return FatLink(node);
}

FatLink sandwich(const FatKnot& outer, const FatLink& mid, const FatKnot& up, const FatKnot& down) {
    return FatLink(std::make_shared<SandwichLink>(outer, mid, up, down));
}

namespace {

constexpr std::array<std::array<double, 2>, 7> kDiscSamples{
    {{0, 0}, {0, 1}, {1, 0}, {-1, 0}, {0, -1}, {0.6, 0.6}, {-0.3, 0.45}}};

template <class F>
double grid_max(int n, F&& f) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        double t = -1.1 + 2.2 * (i + 0.5) / n;
        for (const auto& x : kDiscSamples) worst = std::max(worst, f(Point3{t, x[0], x[1]}));
    }
    return worst;
}

}  // namespace

double sample_deviation(const FatKnot& a, const FatKnot& b, int n) {
    return grid_max(n, [&](const Point3& p) { return dist(a(p), b(p)); });
}

double sample_deviation(const FatLink& a, const FatLink& b, int n) {
    return grid_max(n, [&](const Point3& p) {
        return std::max(dist(a(Strand::upper, p), b(Strand::upper, p)), dist(a(Strand::lower, p), b(Strand::lower, p)));
    });
}

}  // namespace scl
