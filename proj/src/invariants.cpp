#include "scl/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <tuple>

namespace scl {

Shear shear_attempt(int i) {
    if (i == 0) return {};
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(i));
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double a = (unit() - 0.5) * 0.1;
    double b = (unit() - 0.5) * 0.1;
    return {a, b};
}

namespace {

struct P2 {
    double X, Z;
};

P2 project(const Point3& p, const Shear& s) { return {p.x - s.a * p.y, p.z - s.b * p.y}; }
double cross2(const P2& u, const P2& v) { return u.X * v.Z - u.Z * v.X; }
P2 sub(const P2& a, const P2& b) { return {a.X - b.X, a.Z - b.Z}; }

struct Seg {
    P2 p, q;
    double y0, y1;
    double lo, hi;  // X range
    std::size_t idx;
    int curve;
};

std::vector<Seg> segments(const Loop& l, const Shear& s, int curve) {
    std::vector<Seg> out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const auto& a = l[i];
        const auto& b = l[(i + 1) % l.size()];
        P2 p = project(a, s), q = project(b, s);
        out.push_back({p, q, a.y, b.y, std::min(p.X, q.X), std::max(p.X, q.X), i, curve});
    }
    return out;
}

double loop_scale(const Loop& l) {
    double m = 0;
    for (const auto& p : l) m = std::max({m, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    return m;
}

// Signed distance of c from the line through a, b (len = |b - a|).
double side(const P2& a, const P2& b, double len, const P2& c) { return cross2(sub(b, a), sub(c, a)) / len; }

// Whether c lies within the slab of segment ab, with slack eps.
bool within(const P2& a, const P2& b, double len, const P2& c, double eps) {
    P2 d = sub(b, a);
    double s = (d.X * (c.X - a.X) + d.Z * (c.Z - a.Z)) / len;
    return s >= -eps && s <= len + eps;
}

void test_pair(const Seg& A, const Seg& B, double eps, std::vector<Crossing>& out) {
    if (std::max(A.p.Z, A.q.Z) + eps < std::min(B.p.Z, B.q.Z) || std::max(B.p.Z, B.q.Z) + eps < std::min(A.p.Z, A.q.Z))
        return;
    const double la = std::hypot(A.q.X - A.p.X, A.q.Z - A.p.Z);
    const double lb = std::hypot(B.q.X - B.p.X, B.q.Z - B.p.Z);
    if (la < eps || lb < eps) throw DegenerateProjection("a segment projects to a point");
    const double d1 = side(A.p, A.q, la, B.p), d2 = side(A.p, A.q, la, B.q);
    const double d3 = side(B.p, B.q, lb, A.p), d4 = side(B.p, B.q, lb, A.q);
    if ((std::abs(d1) < eps && within(A.p, A.q, la, B.p, eps)) || (std::abs(d2) < eps && within(A.p, A.q, la, B.q, eps)) ||
        (std::abs(d3) < eps && within(B.p, B.q, lb, A.p, eps)) || (std::abs(d4) < eps && within(B.p, B.q, lb, A.q, eps)))
        throw DegenerateProjection("a vertex projects onto the other curve");
    if ((d1 > 0) == (d2 > 0) || (d3 > 0) == (d4 > 0)) return;
    const double s = d3 / (d3 - d4);
    const double u = d1 / (d1 - d2);
    const double ya = A.y0 + s * (A.y1 - A.y0);
    const double yb = B.y0 + u * (B.y1 - B.y0);
    if (std::abs(ya - yb) <= eps) throw GeometryError("the curves intersect");
    const bool a_over = ya < yb;
    const P2 da = sub(A.q, A.p), db = sub(B.q, B.p);
    const double c = a_over ? cross2(da, db) : cross2(db, da);
    out.push_back({A.p.X + s * da.X, A.p.Z + s * da.Z, a_over, c > 0 ? 1 : -1, A.idx, B.idx});
}

}  // namespace

std::vector<Crossing> crossings(const Loop& a, const Loop& b, const Shear& shear) {
    if (a.size() < 2 || b.size() < 2) throw GeometryError("loops need at least two vertices");
    const double eps = 1e-12 * (1 + std::max(loop_scale(a), loop_scale(b)));
    auto all = segments(a, shear, 0);
    auto sb = segments(b, shear, 1);
    all.insert(all.end(), sb.begin(), sb.end());
    std::sort(all.begin(), all.end(), [](const Seg& x, const Seg& y) {
        if (x.lo != y.lo) return x.lo < y.lo;
        if (x.curve != y.curve) return x.curve < y.curve;
        return x.idx < y.idx;
    });
    std::vector<Crossing> out;
    std::vector<const Seg*> active[2];
    for (const auto& s : all) {
        auto& other = active[1 - s.curve];
        std::erase_if(other, [&](const Seg* o) { return o->hi + eps < s.lo; });
        for (const Seg* o : other) {
            if (s.curve == 0)
                test_pair(s, *o, eps, out);
            else
                test_pair(*o, s, eps, out);
        }
        auto& mine = active[s.curve];
        std::erase_if(mine, [&](const Seg* o) { return o->hi + eps < s.lo; });
        mine.push_back(&s);
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        return std::tie(x.seg_a, x.seg_b, x.X) < std::tie(y.seg_a, y.seg_b, y.X);
    });
    return out;
}

std::vector<Crossing> self_crossings(const Loop& a, const Shear& shear) {
    if (a.size() < 3) throw GeometryError("loops need at least three vertices");
    const double eps = 1e-12 * (1 + loop_scale(a));
    auto segs = segments(a, shear, 0);
    const std::size_t n = segs.size();
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // neighbours through the closing vertex
            if (segs[i].hi + eps < segs[j].lo || segs[j].hi + eps < segs[i].lo) continue;
            test_pair(segs[i], segs[j], eps, out);
        }
    return out;
}

Shear generic_shear(const std::vector<Loop>& loops) {
    for (int i = 0; i < 32; ++i) {
        Shear s = shear_attempt(i);
        try {
            for (std::size_t a = 0; a < loops.size(); ++a) {
                (void)self_crossings(loops[a], s);
                for (std::size_t b = a + 1; b < loops.size(); ++b) (void)crossings(loops[a], loops[b], s);
            }
            return s;
        } catch (const DegenerateProjection&) {
        }
    }
    throw GeometryError("no generic projection found after 32 shears");
}

int linking_number(const Loop& a, const Loop& b, const Shear& shear) {
    int sum = 0;
    for (const auto& c : crossings(a, b, shear)) sum += c.sign;
    if (sum % 2 != 0) throw GeometryError("odd signed crossing count; curves are not closed");
    return sum / 2;
}

int linking_number(const Loop& a, const Loop& b) {
    for (int i = 0; i < 32; ++i) {
        try {
            return linking_number(a, b, shear_attempt(i));
        } catch (const DegenerateProjection&) {
        }
    }
    throw GeometryError("no generic projection found after 32 shears");
}

Loop close_below(const Polyline3& c) {
    Loop l = c.p;
    const auto s = c.p.front(), e = c.p.back();
    l.push_back({2, 0, e.z});
    l.push_back({2, 0, -2});
    l.push_back({-2, 0, -2});
    l.push_back({-2, 0, s.z});
    return l;
}

Loop close_above(const Polyline3& c) {
    Loop l = c.p;
    const auto s = c.p.front(), e = c.p.back();
    l.push_back({3, 0, e.z});
    l.push_back({3, 0, 3});
    l.push_back({-3, 0, 3});
    l.push_back({-3, 0, s.z});
    return l;
}

Loop reversed(Loop l) {
    std::reverse(l.begin(), l.end());
    return l;
}

bool loops_apart(const Loop& a, const Loop& b, double gap) {
    // segments of b hashed into cells of side h by their bounding boxes
    const double h = std::max(gap, 0.02);
    auto cell = [h](double v) { return static_cast<std::int64_t>(std::floor(v / h)); };
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
    std::map<Key, std::vector<std::size_t>> grid;
    auto for_cells = [&](const Point3& p, const Point3& q, double pad, auto&& fn) {
        for (auto i = cell(std::min(p.x, q.x) - pad); i <= cell(std::max(p.x, q.x) + pad); ++i)
            for (auto j = cell(std::min(p.y, q.y) - pad); j <= cell(std::max(p.y, q.y) + pad); ++j)
                for (auto k = cell(std::min(p.z, q.z) - pad); k <= cell(std::max(p.z, q.z) + pad); ++k) fn(Key{i, j, k});
    };
    for (std::size_t j = 0; j < b.size(); ++j)
        for_cells(b[j], b[(j + 1) % b.size()], 0, [&](const Key& key) { grid[key].push_back(j); });
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point3 &p = a[i], &q = a[(i + 1) % a.size()];
        bool near = false;
        for_cells(p, q, gap, [&](const Key& key) {
            if (near) return;
            auto it = grid.find(key);
            if (it == grid.end()) return;
            for (auto j : it->second)
                if (segment_distance(p, q, b[j], b[(j + 1) % b.size()]).d <= gap) {
                    near = true;
                    return;
                }
        });
        if (near) return false;
    }
    return true;
}

namespace {

// Materializes at tol, tol/4, ... until every curve pair entering the count is more than
// kCertifyFactor * tol apart, so moving each curve to its exact position crosses nothing.
constexpr double kCertifyFactor = 4;
constexpr double kFinestTolerance = 1e-7;

struct Counts {
    std::vector<int> lk;
    double tol;
};

template <class Curves>
Counts certified_counts(double tol, Curves curves) {
    Counts out;
    std::size_t last_size = 0;
    for (double t = tol;; t /= 4) {
        auto pairs = curves(t);
        std::size_t size = 0;
        bool apart = true;
        out = {{}, t};
        for (const auto& [a, b] : pairs) {
            size += a.size() + b.size();
            apart = apart && loops_apart(a, b, kCertifyFactor * t);
            out.lk.push_back(linking_number(a, b));
        }
        // stored polylines do not refine further
        if (apart || size == last_size || t / 4 < kFinestTolerance) return out;
        last_size = size;
    }
}

std::vector<std::pair<Loop, Loop>> knot_curves(const FatKnot& f, double t) {
    auto tube = f.tube(t);
    return {{close_below(tube.core), close_above(tube.pushoff)}};
}

std::vector<std::pair<Loop, Loop>> link_curves(const FatLink& l, double t) {
    auto u = l.tube(Strand::upper, t);
    auto d = l.tube(Strand::lower, t);
    return {{close_below(u.core), close_above(u.pushoff)},
            {close_below(d.core), close_above(d.pushoff)},
            {close_below(d.core), close_above(u.core)}};
}

}  // namespace

int framing_number(const FatKnot& f, double tol) {
    return certified_counts(tol, [&](double t) { return knot_curves(f, t); }).lk[0];
}

std::pair<int, int> framing_pair(const FatLink& l, double tol) {
    auto c = certified_counts(tol, [&](double t) { return link_curves(l, t); });
    return {c.lk[0], c.lk[1]};
}

int linking_of_strands(const FatLink& l, double tol) {
    return certified_counts(tol, [&](double t) { return link_curves(l, t); }).lk[2];
}

double invariant_resolution(const FatKnot& f, double tol) {
    return certified_counts(tol, [&](double t) { return knot_curves(f, t); }).tol;
}

double invariant_resolution(const FatLink& l, double tol) {
    return certified_counts(tol, [&](double t) { return link_curves(l, t); }).tol;
}

bool DiagnosticReport::certified() const {
    return (!min_separation || *min_separation > 0) && (!min_self_separation || *min_self_separation > 0);
}

namespace {

struct TubeSegs {
    std::vector<Point3> c;
    std::vector<double> rho, arc;
    std::vector<Point3> lo, hi;  // bounding boxes of segments
    double max_rho = 0;
};

TubeSegs prepare(const Tube& t) {
    TubeSegs s;
    s.c = t.core.p;
    double acc = 0;
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        s.rho.push_back(dist(t.pushoff.p[i], s.c[i]));
        s.max_rho = std::max(s.max_rho, s.rho.back());
        if (i) acc += dist(s.c[i], s.c[i - 1]);
        s.arc.push_back(acc);
    }
    for (std::size_t i = 0; i + 1 < s.c.size(); ++i) {
        const auto &a = s.c[i], &b = s.c[i + 1];
        s.lo.push_back({std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)});
        s.hi.push_back({std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)});
    }
    return s;
}

double box_gap(const Point3& alo, const Point3& ahi, const Point3& blo, const Point3& bhi) {
    double dx = std::max({0.0, blo.x - ahi.x, alo.x - bhi.x});
    double dy = std::max({0.0, blo.y - ahi.y, alo.y - bhi.y});
    double dz = std::max({0.0, blo.z - ahi.z, alo.z - bhi.z});
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Reach of a disc of radius rho perpendicular to the segment, in direction dir.
double reach(double rho, const Point3& seg, const Point3& dir) {
    double ls = norm(seg), ld = norm(dir);
    if (ls == 0 || ld == 0) return rho;
    double c = dot(seg, dir) / (ls * ld);
    return rho * std::sqrt(std::max(0.0, 1 - c * c));
}

// Minimum of closest distance minus disc reaches; self pairs close in arc length are skipped.
// Sweep over boxes padded by their own radius, sorted by x, so only pairs whose padded
// boxes come within the current minimum are measured.
std::optional<double> min_separation(const TubeSegs& A, const TubeSegs& B, bool self) {
    struct Item {
        double lo, hi;  // padded x-extent
        std::size_t seg;
        bool from_b;
    };
    std::vector<Item> items;
    auto add = [&](const TubeSegs& T, bool from_b) {
        for (std::size_t i = 0; i + 1 < T.c.size(); ++i) {
            double pad = std::max(T.rho[i], T.rho[i + 1]);
            items.push_back({T.lo[i].x - pad, T.hi[i].x + pad, i, from_b});
        }
    };
    add(A, false);
    if (!self) add(B, true);
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return std::tie(x.lo, x.from_b, x.seg) < std::tie(y.lo, y.from_b, y.seg);
    });

    std::optional<double> best;
    auto measure = [&](std::size_t i, std::size_t j) {
        const double pad = std::max(A.rho[i], A.rho[i + 1]) + std::max(B.rho[j], B.rho[j + 1]);
        if (best && box_gap(A.lo[i], A.hi[i], B.lo[j], B.hi[j]) - pad >= *best) return;
        auto sd = segment_distance(A.c[i], A.c[i + 1], B.c[j], B.c[j + 1]);
        double ra = A.rho[i] + sd.s * (A.rho[i + 1] - A.rho[i]);
        double rb = B.rho[j] + sd.u * (B.rho[j + 1] - B.rho[j]);
        if (self) {
            double ga = A.arc[i] + sd.s * (A.arc[i + 1] - A.arc[i]);
            double gb = B.arc[j] + sd.u * (B.arc[j + 1] - B.arc[j]);
            if (std::abs(ga - gb) < (ra + rb) * std::numbers::pi / 2) return;
        }
        Point3 pa = lerp(A.c[i], A.c[i + 1], sd.s), pb = lerp(B.c[j], B.c[j + 1], sd.u);
        Point3 d = pb - pa;
        double sep = sd.d - reach(ra, A.c[i + 1] - A.c[i], d) - reach(rb, B.c[j + 1] - B.c[j], d);
        if (!best || sep < *best) best = sep;
    };
    for (std::size_t x = 0; x < items.size(); ++x)
        for (std::size_t y = x + 1; y < items.size(); ++y) {
            if (best && items[y].lo - items[x].hi >= *best) break;
            const Item &p = items[x], &q = items[y];
            if (self) {
                auto [i, j] = std::minmax(p.seg, q.seg);
                if (i != j) measure(i, j);
            } else if (p.from_b != q.from_b) {
                p.from_b ? measure(q.seg, p.seg) : measure(p.seg, q.seg);
            }
        }
    return best;
}

}  // namespace

DiagnosticReport diagnostics(const Tube& t, double tol) {
    auto s = prepare(t);
    DiagnosticReport r;
    r.resolution = tol;
    r.segments = s.c.size() - 1;
    r.min_self_separation = min_separation(s, s, true);
    return r;
}

DiagnosticReport diagnostics(const Tube& upper, const Tube& lower, double tol) {
    auto u = prepare(upper), l = prepare(lower);
    DiagnosticReport r;
    r.resolution = tol;
    r.segments = u.c.size() + l.c.size() - 2;
    r.min_separation = min_separation(u, l, false);
    auto su = min_separation(u, u, true), sl = min_separation(l, l, true);
    if (su && sl)
        r.min_self_separation = std::min(*su, *sl);
    else
        r.min_self_separation = su ? su : sl;
    return r;
}

DiagnosticReport diagnostics(const FatKnot& f, double tol) { return diagnostics(f.tube(tol), tol); }

DiagnosticReport diagnostics(const FatLink& l, double tol) {
    return diagnostics(l.tube(Strand::upper, tol), l.tube(Strand::lower, tol), tol);
}

}  // namespace scl
