#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "scl/cubes.hpp"
#include "scl/geometry.hpp"

namespace scl {

/// Core and pushoff on a shared parameter grid.
struct Tube {
    Polyline3 core;
    Polyline3 pushoff;

    friend bool operator==(const Tube&, const Tube&) = default;
};

enum class Strand { upper = 0, lower = 1 };
inline constexpr Strand kStrands[2] = {Strand::upper, Strand::lower};
const char* to_string(Strand s);

/// The standard string-link inclusion of strand s: (t, x) -> (t, x/8 + (0, +-1/2)).
Point3 iota(Strand s, const Point3& p);

inline constexpr double kChordTolerance = 1e-4;

namespace detail {
struct KnotNode;
struct LinkNode;
}  // namespace detail

/// A fat long knot: a self-map of R x D^2, identity outside J x D^2.
/// Stored as an expression tree of tube leaves, conjugations and compositions.
class FatKnot {
public:
    explicit FatKnot(std::shared_ptr<const detail::KnotNode> n) : node_(std::move(n)) {}

    /// Builds a leaf after checking the tube invariants.
    static FatKnot from_tube(Tube tube);

    Point3 operator()(const Point3& p) const;
    /// Stored tube for leaves; adaptively sampled core and pushoff otherwise.
    Tube tube(double tol = kChordTolerance) const;
    bool is_leaf() const;
    const detail::KnotNode& node() const { return *node_; }

private:
    std::shared_ptr<const detail::KnotNode> node_;
};

/// A fat string 2-link: two strand maps R x D^2 -> R x D^2, equal to iota outside J.
class FatLink {
public:
    explicit FatLink(std::shared_ptr<const detail::LinkNode> n) : node_(std::move(n)) {}

    static FatLink from_tubes(Tube upper, Tube lower);

    Point3 operator()(Strand s, const Point3& p) const;
    Tube tube(Strand s, double tol = kChordTolerance) const;
    bool is_leaf() const;
    const detail::LinkNode& node() const { return *node_; }

private:
    std::shared_ptr<const detail::LinkNode> node_;
};

void validate_knot_tube(const Tube& t);
void validate_link_tube(Strand s, const Tube& t);

FatKnot standard_knot();
FatLink standard_link();
/// n full turns of the pushoff about a straight core.
FatKnot twist(int n);

Point3 evaluate(const FatKnot& f, double t, double x1, double x2);
Point3 evaluate(const FatLink& l, Strand s, double t, double x1, double x2);

/// (L x id) o f o (L^-1 x id)
FatKnot cube1_conjugate(const AffineInc& L, const FatKnot& f);
FatLink cube1_conjugate(const AffineInc& L, const FatLink& l);
/// g o f
FatKnot compose(const FatKnot& g, const FatKnot& f);
/// Piecewise link: on L_i(J) the conjugated link i, iota elsewhere. Intervals must be almost disjoint.
FatLink concatenate(const std::vector<std::pair<AffineInc, FatLink>>& pieces);
/// Strand s goes to outer o mid_s o knot_s, where knot_upper = up and knot_lower = down.
FatLink sandwich(const FatKnot& outer, const FatLink& mid, const FatKnot& up, const FatKnot& down);

/// Largest distance between two knots over a fixed grid of n parameters and disc points.
double sample_deviation(const FatKnot& a, const FatKnot& b, int n = 97);
double sample_deviation(const FatLink& a, const FatLink& b, int n = 97);

}  // namespace scl
