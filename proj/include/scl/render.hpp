#pragma once

#include <string>

#include "scl/actions.hpp"
#include "scl/cubes.hpp"
#include "scl/scl_operad.hpp"

namespace scl {

/// Numbered boxes inside the unit frame (intervals for dimension 1).
std::string render_cubes(const CubeConfig& l);
/// Boxes labeled i^s, with the output color as a subscript of the frame.
std::string render_scl(const SclElement& e);
/// Projection along y of the closed cores, with gaps in the under-strands. Uses the
/// first shear of the linking-number retry sequence that is generic for every curve.
std::string render_diagram(const Presentation& p, double tol = kChordTolerance);

}  // namespace scl
