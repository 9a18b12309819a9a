#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace scl {

/// Degenerate or non-embedded geometric data.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point3 {
    double x = 0, y = 0, z = 0;

    Point3& operator+=(const Point3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Point3& operator-=(const Point3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Point3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    friend Point3 operator+(Point3 a, const Point3& b) { return a += b; }
    friend Point3 operator-(Point3 a, const Point3& b) { return a -= b; }
    friend Point3 operator*(Point3 a, double s) { return a *= s; }
    friend Point3 operator*(double s, Point3 a) { return a *= s; }
    friend bool operator==(const Point3&, const Point3&) = default;
};

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double dist(const Point3& a, const Point3& b) { return norm(a - b); }
inline Point3 lerp(const Point3& a, const Point3& b, double w) { return a * (1 - w) + b * w; }
inline bool finite(const Point3& p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

/// Vertices with strictly increasing parameters.
struct Polyline3 {
    std::vector<double> t;
    std::vector<Point3> p;

    std::size_t size() const { return p.size(); }
    /// Throws GeometryError unless parameters increase strictly from -1 to 1 and vertices are finite and distinct.
    void validate() const;
    /// Piecewise-linear evaluation, clamped to the end vertices.
    Point3 at(double s) const;
    /// Index i with t[i] <= s <= t[i+1].
    std::size_t segment(double s) const;

    friend bool operator==(const Polyline3&, const Polyline3&) = default;
};

/// Closest distance between segments [p0,p1] and [q0,q1], with the segment parameters attaining it.
struct SegmentDistance {
    double d;
    double s;
    double u;
};
SegmentDistance segment_distance(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1);

}  // namespace scl
