#include "scl/geometry.hpp"

#include <algorithm>
#include <string>

namespace scl {

void Polyline3::validate() const {
    if (t.size() != p.size()) throw GeometryError("polyline has mismatched parameter and vertex counts");
    if (p.size() < 2) throw GeometryError("polyline needs at least two vertices");
    if (t.front() != -1.0 || t.back() != 1.0) throw GeometryError("polyline parameters must run from -1 to 1");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!std::isfinite(t[i]) || !finite(p[i])) throw GeometryError("polyline has non-finite data");
        if (i && !(t[i] > t[i - 1]))
            throw GeometryError("polyline parameters must increase strictly (row " + std::to_string(i + 1) + ")");
        if (i && p[i] == p[i - 1]) throw GeometryError("consecutive polyline vertices coincide (row " + std::to_string(i + 1) + ")");
    }
}

std::size_t Polyline3::segment(double s) const {
    auto it = std::upper_bound(t.begin(), t.end(), s);
    std::size_t i = it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
    return std::min(i, t.size() - 2);
}

Point3 Polyline3::at(double s) const {
    if (s <= t.front()) return p.front();
    if (s >= t.back()) return p.back();
    auto i = segment(s);
    return lerp(p[i], p[i + 1], (s - t[i]) / (t[i + 1] - t[i]));
}

SegmentDistance segment_distance(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1) {
    const Point3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
    const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    double s = 0, u = 0;
    if (a <= 1e-300 && e <= 1e-300) return {dist(p0, q0), 0, 0};
    if (a <= 1e-300) {
        u = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= 1e-300) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2), denom = a * e - b * b;
            s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            u = (b * s + f) / e;
            if (u < 0) {
                u = 0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (u > 1) {
                u = 1;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return {dist(p0 + d1 * s, q0 + d2 * u), s, u};
}

}  // namespace scl
