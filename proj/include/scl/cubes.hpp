#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "scl/rational.hpp"

namespace scl {

/// Raised when a configuration or operad element fails its defining
/// constraints. The message names the violated clause.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., n-1} stored as its values: p[i] = p(i).
using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n);
Perm inverse(const Perm& p);
/// (p * q)(i) = p(q(i)).
Perm compose_perm(const Perm& p, const Perm& q);
bool is_perm(const Perm& p);
/// All permutations of n in lexicographic order.
std::vector<Perm> all_perms(std::size_t n);

/// x -> scale * x + offset with scale > 0.
class AffineInc {
public:
    AffineInc() = default;
    AffineInc(Rational scale, Rational offset);

    const Rational& scale() const { return scale_; }
    const Rational& offset() const { return offset_; }

    Rational operator()(const Rational& x) const { return scale_ * x + offset_; }
    AffineInc inverse() const;
    /// Image of [-1, 1].
    Rational lo() const { return offset_ - scale_; }
    Rational hi() const { return offset_ + scale_; }
    /// True when the map sends [-1, 1] into itself.
    bool maps_unit_interval() const;

    friend bool operator==(const AffineInc&, const AffineInc&) = default;

private:
    Rational scale_{1};
    Rational offset_{0};
};

/// f o g.
AffineInc affine_compose(const AffineInc& f, const AffineInc& g);

/// Product of n affine increasing maps, each sending J = [-1, 1] into J.
class LittleCube {
public:
    explicit LittleCube(std::vector<AffineInc> factors);
    static LittleCube identity(std::size_t dim);

    std::size_t dim() const { return factors_.size(); }
    const std::vector<AffineInc>& factors() const { return factors_; }
    const AffineInc& factor(std::size_t axis) const { return factors_.at(axis); }

    friend bool operator==(const LittleCube&, const LittleCube&) = default;

private:
    std::vector<AffineInc> factors_;
};

/// Factorwise composition a o b.
LittleCube cube_compose(const LittleCube& a, const LittleCube& b);

/// Interiors of the images are disjoint, i.e. the open image intervals are
/// disjoint along at least one axis.
bool almost_disjoint(const LittleCube& a, const LittleCube& b);

/// Last factor sends -1 to -1.
bool meets_lower_face(const LittleCube& a);

enum class CubeMode { overlapping, disjoint, lowerface };

const char* to_string(CubeMode m);
CubeMode cube_mode_from_string(const std::string& s);

/// An element of the overlapping little cubes operad, or of one of its
/// sub-operads when the mode says so. Construction validates the mode.
class CubeConfig {
public:
    CubeConfig(std::size_t dim, std::vector<LittleCube> cubes, CubeMode mode);

    static CubeConfig unit(std::size_t dim, CubeMode mode = CubeMode::disjoint);
    static CubeConfig empty(std::size_t dim, CubeMode mode = CubeMode::disjoint);

    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return cubes_.size(); }
    CubeMode mode() const { return mode_; }
    const std::vector<LittleCube>& cubes() const { return cubes_; }
    const LittleCube& cube(std::size_t i) const { return cubes_.at(i); }

    /// Same cubes under another mode; validates.
    CubeConfig with_mode(CubeMode mode) const { return CubeConfig(dim_, cubes_, mode); }

    friend bool operator==(const CubeConfig&, const CubeConfig&) = default;

private:
    std::size_t dim_;
    std::vector<LittleCube> cubes_;
    CubeMode mode_;
};

/// Violated clauses of `mode` for the given cubes; empty when valid.
std::vector<std::string> config_violations(std::size_t dim, const std::vector<LittleCube>& cubes,
                                           CubeMode mode);

/// L o_i P (0-based i). An arity-0 P discards the i-th cube. The result mode
/// is the weaker of the two modes and is revalidated.
CubeConfig cube_compose_at(const CubeConfig& l, std::size_t i, const CubeConfig& p);

/// Right action: cube j of the result is cube sigma(j) of L.
CubeConfig cube_sigma(const CubeConfig& l, const Perm& sigma);

/// First factors of a 2-dimensional configuration, as overlapping 1-cubes.
CubeConfig projection_pi(const CubeConfig& l);

/// Second factor of each cube evaluated at -1.
std::vector<Rational> heights_t(const CubeConfig& l);

}  // namespace scl
