#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "scl/cubes.hpp"

namespace scl {

/// Colors of the Swiss Cheese operad for links. `o` is the open color; the
/// others name the upper strand, the lower strand and both strands.
enum class Color { o = 0, up = 1, down = 2, updown = 3 };

inline constexpr std::array<Color, 4> kAllColors{Color::o, Color::up, Color::down, Color::updown};
inline constexpr std::array<Color, 3> kClosedColors{Color::up, Color::down, Color::updown};

const char* to_string(Color c);
Color color_from_string(const std::string& s);

/// Number of occurrences of `c` in `t`.
std::size_t color_count(const std::vector<Color>& t, Color c);

/// t o_i u (0-based i).
std::vector<Color> splice_colors(const std::vector<Color>& t, std::size_t i, const std::vector<Color>& u);

struct SclViolation {
    std::string clause;
    std::vector<std::size_t> cubes;  // 0-based offending indices
};

struct SclReport {
    std::vector<SclViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks every SCL clause for the given data without constructing anything.
SclReport scl_validate(const std::vector<Color>& inputs, Color output, const std::vector<LittleCube>& cubes);

/// Operation of SCL(inputs; output): a 2-dimensional cube configuration with
/// colored inputs. Construction throws ValidationError on any violation.
class SclElement {
public:
    SclElement(std::vector<Color> inputs, Color output, std::vector<LittleCube> cubes);

    static SclElement identity(Color c);

    const std::vector<Color>& inputs() const { return inputs_; }
    Color output() const { return output_; }
    const CubeConfig& config() const { return config_; }
    std::size_t arity() const { return inputs_.size(); }

    friend bool operator==(const SclElement&, const SclElement&) = default;

private:
    std::vector<Color> inputs_;
    Color output_;
    CubeConfig config_;
};

/// A o_i B (0-based). B's output must equal A's i-th input color.
SclElement scl_compose_at(const SclElement& a, std::size_t i, const SclElement& b);

/// Right permutation action on operations: cube and color j of the result
/// come from position sigma(j).
SclElement scl_sigma(const SclElement& a, const Perm& sigma);

/// Color-sorting maps: alpha[s] lists positions of color s in `t`.
struct ColorSort {
    std::array<std::vector<std::size_t>, 4> alpha;

    const std::vector<std::size_t>& of(Color c) const { return alpha[static_cast<std::size_t>(c)]; }
    std::vector<std::size_t>& of(Color c) { return alpha[static_cast<std::size_t>(c)]; }

    /// True if the maps are injective, disjoint, cover [|t|] and respect colors.
    bool sorts(const std::vector<Color>& t) const;

    template <class T>
    std::vector<T> restrict(Color c, const std::vector<T>& inputs) const {
        std::vector<T> out;
        for (auto i : of(c)) out.push_back(inputs.at(i));
        return out;
    }
};

/// Canonical sort: increasing positions.
ColorSort color_sort(const std::vector<Color>& t);

/// Sub-configuration of cubes of color c, listed in alpha_c order. Closed
/// colors give disjoint configurations, `o` gives a lowerface one.
CubeConfig restrict_config(const SclElement& e, Color c, const ColorSort& sort);

/// A connected component label: a point, or an ordering of indices.
struct Pi0Class {
    enum class Kind { point, permutation };
    Kind kind = Kind::point;
    /// Indices listed by increasing left endpoint of their x-image.
    std::vector<std::size_t> order;

    static Pi0Class point() { return {}; }
    static Pi0Class perm(std::vector<std::size_t> order) { return {Kind::permutation, std::move(order)}; }
    /// rank[i] = position of index i in `order`.
    Perm rank() const { return inverse(order); }

    friend bool operator==(const Pi0Class&, const Pi0Class&) = default;
    friend auto operator<=>(const Pi0Class&, const Pi0Class&) = default;
};

/// Component of a disjoint 1-dimensional configuration (a point for n >= 2).
Pi0Class pi0_class(const CubeConfig& l);

/// Component of an SCL operation: ordering of its o-colored cubes (indices
/// relative to the canonical alpha_o), or a point for closed outputs.
Pi0Class pi0_class_scl(const SclElement& e);

}  // namespace scl
