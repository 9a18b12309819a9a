#pragma once

#include <variant>
#include <vector>

#include "scl/cubes.hpp"
#include "scl/fat.hpp"
#include "scl/ordering.hpp"
#include "scl/scl_operad.hpp"

namespace scl {

using Presentation = std::variant<FatKnot, FatLink>;

/// An input of the wrong kind for its color.
class KindMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Composes the x-conjugated knots in the canonical ordering, lowest cube outermost
/// (highest outermost for the reverse direction). Arity 0 gives the standard knot.
FatKnot kappa_act(const CubeConfig& l, const std::vector<FatKnot>& knots,
                  OrderDirection dir = OrderDirection::standard);
/// Same with an explicit ordering permutation, which must be a linear extension.
FatKnot kappa_act(const CubeConfig& l, const std::vector<FatKnot>& knots, const Perm& order,
                  OrderDirection dir = OrderDirection::standard);

/// Concatenation of string links along a disjoint 1-configuration.
FatLink lambda_act(const CubeConfig& l, const std::vector<FatLink>& links);

/// Knot on the upper strand, the lower strand, or both strands in parallel.
FatLink phi_hat(Color s, const FatKnot& f);

/// The SCL action. Closed outputs give knots, output o gives links.
Presentation mu_act(const SclElement& e, const std::vector<Presentation>& inputs);
/// Same with an explicit color-sorting, which must sort the input colors.
Presentation mu_act(const SclElement& e, const std::vector<Presentation>& inputs, const ColorSort& alpha);

}  // namespace scl
