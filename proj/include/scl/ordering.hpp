#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "scl/cubes.hpp"

namespace scl {

/// Strict partial order on cube indices; `less(i, j)` means cube i precedes
/// cube j. Stored as a transitively closed adjacency matrix.
class PartialOrderDag {
public:
    explicit PartialOrderDag(std::size_t size = 0);

    std::size_t size() const { return n_; }
    bool less(std::size_t i, std::size_t j) const { return rel_[i * n_ + j]; }
    bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Transitive closure of the given generating pairs. Throws if cyclic.
    static PartialOrderDag from_generators(std::size_t n,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& gens);
    PartialOrderDag reversed() const;

    friend bool operator==(const PartialOrderDag&, const PartialOrderDag&) = default;

private:
    std::size_t n_;
    std::vector<bool> rel_;
};

enum class OrderDirection { standard, reverse };

/// Order generated by: i < j when cube i sits strictly lower (heights_t) and
/// the open x-projections of i and j intersect. L must be a valid disjoint
/// 2-dimensional configuration.
PartialOrderDag partial_order(const CubeConfig& l);

/// Calls `visit` with every linear extension in lexicographic order. A
/// linear extension is listed as the sequence of indices, smallest first.
/// Returning false from `visit` stops the enumeration.
void for_each_linear_extension(const PartialOrderDag& dag, const std::function<bool(const Perm&)>& visit);

std::vector<Perm> linear_extensions(const PartialOrderDag& dag);

/// Permutations sigma for which i -> L^{sigma(i)} is non-decreasing
/// (standard) or non-increasing (reverse).
std::vector<Perm> ordering_permutations(const CubeConfig& l, OrderDirection dir = OrderDirection::standard);

/// Lexicographically smallest ordering permutation.
Perm canonical_ordering(const CubeConfig& l, OrderDirection dir = OrderDirection::standard);

/// True when sigma orders L in the given direction.
bool orders(const PartialOrderDag& dag, const Perm& sigma);

}  // namespace scl
