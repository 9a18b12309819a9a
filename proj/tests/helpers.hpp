#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "scl/cubes.hpp"
#include "scl/scl_operad.hpp"

namespace scl::test {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

/// Affine map sending [-1,1] onto [lo,hi].
inline AffineInc onto(Rational lo, Rational hi) { return AffineInc((hi - lo) / Rational(2), (hi + lo) / Rational(2)); }

inline LittleCube box(std::initializer_list<std::pair<Rational, Rational>> sides) {
    std::vector<AffineInc> f;
    for (auto [lo, hi] : sides) f.push_back(onto(lo, hi));
    return LittleCube(std::move(f));
}

inline LittleCube interval(Rational lo, Rational hi) { return box({{lo, hi}}); }
inline LittleCube rect(Rational x0, Rational x1, Rational y0, Rational y1) { return box({{x0, x1}, {y0, y1}}); }

/// Outer operation of the composition figure: SCL(updown,o,up,updown,down,o,up; o).
inline SclElement figure_outer() {
    return SclElement({Color::updown, Color::o, Color::up, Color::updown, Color::down, Color::o, Color::up}, Color::o,
                      {rect(q(-1), q(1), q(1, 2), q(1)),              // updown, full width on top
                       rect(q(-1), q(-1, 2), q(-1), q(-1, 2)),        // o
                       rect(q(-1, 2), q(1, 2), q(-1, 2), q(1, 4)),    // up
                       rect(q(-1), q(0), q(-1, 4), q(1, 4)),          // updown
                       rect(q(-1, 4), q(3, 4), q(-1, 4), q(1)),       // down
                       rect(q(1, 2), q(1), q(-1), q(-1, 2)),          // o
                       rect(q(1, 2), q(1), q(-1, 4), q(1, 2))});      // up
}

inline SclElement figure_inner() {
    return SclElement({Color::up, Color::up, Color::up}, Color::up,
                      {rect(q(-1), q(0), q(-1), q(0)), rect(q(0), q(1), q(-1), q(0)), rect(q(-1), q(1), q(0), q(1))});
}

}  // namespace scl::test
