#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scl/fat.hpp"
#include "scl/geometry.hpp"

namespace scl {

/// Closed polygon; the last vertex connects back to the first.
using Loop = std::vector<Point3>;

/// Projection along y after the shear (x, z) -> (x - a y, z - b y).
struct Shear {
    double a = 0;
    double b = 0;
};

/// The i-th shear of the retry sequence; attempt 0 is the plain projection.
Shear shear_attempt(int i);

/// No generic projection for this shear (a vertex on a crossing or overlapping segments).
class DegenerateProjection : public GeometryError {
public:
    using GeometryError::GeometryError;
};

struct Crossing {
    double X, Z;       // projected position
    bool a_over;       // curve a passes over curve b (smaller y)
    int sign;          // +1 or -1
    std::size_t seg_a, seg_b;
};

/// Crossings between the projections of a and b; throws DegenerateProjection or GeometryError.
std::vector<Crossing> crossings(const Loop& a, const Loop& b, const Shear& shear);

/// Crossings of a loop with itself (non-adjacent segments); a_over refers to seg_a.
std::vector<Crossing> self_crossings(const Loop& a, const Shear& shear);
/// First shear of the retry sequence under which all loops and pairs project generically.
Shear generic_shear(const std::vector<Loop>& loops);

/// Half the signed crossing count under one shear.
int linking_number(const Loop& a, const Loop& b, const Shear& shear);
/// Retries shears until the projection is generic (32 attempts).
int linking_number(const Loop& a, const Loop& b);

/// Core-style closure through z = -2 and pushoff-style closure through z = +3, both in the plane y = 0.
Loop close_below(const Polyline3& c);
Loop close_above(const Polyline3& c);
Loop reversed(Loop l);

/// True when no segment of the closed polygon a comes within `gap` of one of b.
bool loops_apart(const Loop& a, const Loop& b, double gap);

/// The integer invariants materialize at tol and, while some counted pair of curves comes
/// within 4 * tol, again at tol/4 (down to 1e-7), so chord errors cannot change the count.
int framing_number(const FatKnot& f, double tol = kChordTolerance);
std::pair<int, int> framing_pair(const FatLink& l, double tol = kChordTolerance);
/// lk of the lower core closed below with the upper core closed above.
int linking_of_strands(const FatLink& l, double tol = kChordTolerance);
/// The tolerance at which the counts above were certified.
double invariant_resolution(const FatKnot& f, double tol = kChordTolerance);
double invariant_resolution(const FatLink& l, double tol = kChordTolerance);

struct DiagnosticReport {
    std::optional<double> min_separation;       // across strands; absent for knots
    std::optional<double> min_self_separation;  // absent when no pair qualifies
    double resolution = 0;                      // chord tolerance used
    std::size_t segments = 0;

    /// Every measured separation is positive.
    bool certified() const;
};

DiagnosticReport diagnostics(const Tube& t, double tol = kChordTolerance);
DiagnosticReport diagnostics(const Tube& upper, const Tube& lower, double tol = kChordTolerance);
DiagnosticReport diagnostics(const FatKnot& f, double tol = kChordTolerance);
DiagnosticReport diagnostics(const FatLink& l, double tol = kChordTolerance);

}  // namespace scl
