#include "scl/cubes.hpp"

#include <algorithm>
#include <numeric>

namespace scl {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q.at(p[i]) = i;
    return q;
}

Perm compose_perm(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p.at(q[i]);
    return r;
}

bool is_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Perm> all_perms(std::size_t n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

AffineInc::AffineInc(Rational scale, Rational offset) : scale_(scale), offset_(offset) {
    if (scale_.sign() <= 0) throw ValidationError("affine map must have positive scale");
}

AffineInc AffineInc::inverse() const {
    Rational inv = Rational(1) / scale_;
    return AffineInc(inv, -offset_ * inv);
}

bool AffineInc::maps_unit_interval() const { return scale_ + offset_.abs() <= Rational(1); }

AffineInc affine_compose(const AffineInc& f, const AffineInc& g) {
    return AffineInc(f.scale() * g.scale(), f.scale() * g.offset() + f.offset());
}

LittleCube::LittleCube(std::vector<AffineInc> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ValidationError("little cube needs at least one factor");
    for (std::size_t a = 0; a < factors_.size(); ++a)
        if (!factors_[a].maps_unit_interval())
            throw ValidationError("little cube factor " + std::to_string(a + 1) +
                                  " does not map [-1,1] into [-1,1]");
}

LittleCube LittleCube::identity(std::size_t dim) { return LittleCube(std::vector<AffineInc>(dim)); }

LittleCube cube_compose(const LittleCube& a, const LittleCube& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("cube dimension mismatch");
    std::vector<AffineInc> f;
    f.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) f.push_back(affine_compose(a.factor(k), b.factor(k)));
    return LittleCube(std::move(f));
}

bool almost_disjoint(const LittleCube& a, const LittleCube& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("cube dimension mismatch");
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const auto& fa = a.factor(k);
        const auto& fb = b.factor(k);
        if (fa.hi() <= fb.lo() || fb.hi() <= fa.lo()) return true;
    }
    return false;
}

bool meets_lower_face(const LittleCube& a) {
    return a.factors().back()(Rational(-1)) == Rational(-1);
}

const char* to_string(CubeMode m) {
    switch (m) {
        case CubeMode::overlapping: return "over";
        case CubeMode::disjoint: return "disjoint";
        case CubeMode::lowerface: return "lowerface";
    }
    return "?";
}

CubeMode cube_mode_from_string(const std::string& s) {
    if (s == "over" || s == "overlapping") return CubeMode::overlapping;
    if (s == "disjoint") return CubeMode::disjoint;
    if (s == "lowerface") return CubeMode::lowerface;
    throw std::invalid_argument("unknown cube mode '" + s + "'");
}

std::vector<std::string> config_violations(std::size_t dim, const std::vector<LittleCube>& cubes,
                                           CubeMode mode) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cubes.size(); ++i)
        if (cubes[i].dim() != dim)
            out.push_back("cube " + std::to_string(i + 1) + " has dimension " +
                          std::to_string(cubes[i].dim()) + ", expected " + std::to_string(dim));
    if (!out.empty() || mode == CubeMode::overlapping) return out;
    for (std::size_t i = 0; i < cubes.size(); ++i)
        for (std::size_t j = i + 1; j < cubes.size(); ++j)
            if (!almost_disjoint(cubes[i], cubes[j]))
                out.push_back("cubes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " are not almost disjoint");
    if (mode == CubeMode::lowerface)
        for (std::size_t i = 0; i < cubes.size(); ++i)
            if (!meets_lower_face(cubes[i]))
                out.push_back("cube " + std::to_string(i + 1) + " does not meet the lower face");
    return out;
}

CubeConfig::CubeConfig(std::size_t dim, std::vector<LittleCube> cubes, CubeMode mode)
    : dim_(dim), cubes_(std::move(cubes)), mode_(mode) {
    if (dim_ == 0) throw ValidationError("configuration dimension must be positive");
    auto v = config_violations(dim_, cubes_, mode_);
    if (!v.empty()) throw ValidationError(std::string(to_string(mode_)) + " configuration: " + v.front());
}

CubeConfig CubeConfig::unit(std::size_t dim, CubeMode mode) {
    return CubeConfig(dim, {LittleCube::identity(dim)}, mode);
}

CubeConfig CubeConfig::empty(std::size_t dim, CubeMode mode) { return CubeConfig(dim, {}, mode); }

CubeConfig cube_compose_at(const CubeConfig& l, std::size_t i, const CubeConfig& p) {
    if (i >= l.arity())
        throw std::out_of_range("composition index " + std::to_string(i + 1) + " out of range for arity " +
                                std::to_string(l.arity()));
    if (l.dim() != p.dim()) throw std::invalid_argument("composition dimension mismatch");
    std::vector<LittleCube> cubes;
    cubes.reserve(l.arity() + p.arity());
    for (std::size_t j = 0; j < i; ++j) cubes.push_back(l.cube(j));
    for (const auto& q : p.cubes()) cubes.push_back(cube_compose(l.cube(i), q));
    for (std::size_t j = i + 1; j < l.arity(); ++j) cubes.push_back(l.cube(j));
    CubeMode mode = std::min(l.mode(), p.mode());
    return CubeConfig(l.dim(), std::move(cubes), mode);
}

CubeConfig cube_sigma(const CubeConfig& l, const Perm& sigma) {
    if (sigma.size() != l.arity()) throw std::invalid_argument("permutation size does not match arity");
    if (!is_perm(sigma)) throw std::invalid_argument("not a permutation");
    std::vector<LittleCube> cubes;
    cubes.reserve(sigma.size());
    for (auto s : sigma) cubes.push_back(l.cube(s));
    return CubeConfig(l.dim(), std::move(cubes), l.mode());
}

CubeConfig projection_pi(const CubeConfig& l) {
    if (l.dim() != 2) throw std::invalid_argument("projection needs a 2-dimensional configuration");
    std::vector<LittleCube> cubes;
    for (const auto& c : l.cubes()) cubes.emplace_back(std::vector<AffineInc>{c.factor(0)});
    return CubeConfig(1, std::move(cubes), CubeMode::overlapping);
}

std::vector<Rational> heights_t(const CubeConfig& l) {
    if (l.dim() != 2) throw std::invalid_argument("heights need a 2-dimensional configuration");
    std::vector<Rational> out;
    for (const auto& c : l.cubes()) out.push_back(c.factor(1)(Rational(-1)));
    return out;
}

}  // namespace scl
