#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "scl/cubes.hpp"
#include "scl/monoids.hpp"
#include "scl/scl_operad.hpp"

namespace scl {

/// Block substitution of permutations in rank form (0-based i).
Perm as_compose(const Perm& sigma, std::size_t i, const Perm& tau);

/// Com lives on the single color up, As on the single color o.
enum class OperadKind { Com, As, Pi0SCL };
const char* to_string(OperadKind k);

/// A component of the operation space: colors plus the left-to-right rank of the o-inputs.
struct Pi0Op {
    std::vector<Color> inputs;
    Color output = Color::o;
    Perm rank;

    std::size_t arity() const { return inputs.size(); }
    friend bool operator==(const Pi0Op&, const Pi0Op&) = default;
    friend auto operator<=>(const Pi0Op&, const Pi0Op&) = default;
};

class Pi0Operad {
public:
    explicit Pi0Operad(OperadKind kind) : kind_(kind) {}
    OperadKind kind() const { return kind_; }

    std::vector<Color> colors() const;
    bool valid(const Pi0Op& a) const;
    Pi0Op identity(Color c) const;
    /// Every component with the given profile (empty when the space is empty).
    std::vector<Pi0Op> operations(const std::vector<Color>& inputs, Color output) const;
    Pi0Op compose(const Pi0Op& a, std::size_t i, const Pi0Op& b) const;
    /// Right action, input j of a·sigma is input sigma(j) of a.
    Pi0Op act(const Pi0Op& a, const Perm& sigma) const;
    /// The binary multiplication of color c.
    Pi0Op product(Color c) const;

private:
    void require(const Pi0Op& a) const;
    OperadKind kind_;
};

Pi0Op pi0_op(const CubeConfig& l);  // dim 1 gives As, dim >= 2 gives Com
Pi0Op pi0_op(const SclElement& e);

struct Generators {
    std::array<std::vector<std::string>, 4> by_color;  // indexed by Color

    const std::vector<std::string>& of(Color c) const { return by_color[static_cast<std::size_t>(c)]; }
    std::vector<std::string>& of(Color c) { return by_color[static_cast<std::size_t>(c)]; }
};

/// (operation, generator tuple), stored as the least member of its orbit.
struct FreeElement {
    Pi0Op op;
    std::vector<std::string> inputs;

    Color color() const { return op.output; }
    friend bool operator==(const FreeElement&, const FreeElement&) = default;
    friend auto operator<=>(const FreeElement&, const FreeElement&) = default;
};

/// Free algebra over a pi0 operad as the orbit quotient of O(t;s) x X^t.
class FreeAlgebra {
public:
    FreeAlgebra(Pi0Operad op, Generators gens);
    const Pi0Operad& operad() const { return op_; }
    const Generators& generators() const { return gens_; }

    FreeElement generator(Color c, const std::string& label) const;
    FreeElement normalize(FreeElement e) const;
    FreeElement act(const Pi0Op& a, const std::vector<FreeElement>& xs) const;
    FreeElement mul(const FreeElement& a, const FreeElement& b) const;
    /// All elements of color c with at most max_arity generators.
    std::vector<FreeElement> elements(Color c, std::size_t max_arity) const;

private:
    Pi0Operad op_;
    Generators gens_;
};

/// Normal form of the free pi0 SCL algebra: for o an As-word plus three Com-words,
/// for a closed color s just the Com-word in slot s.
struct SclNormalForm {
    Color color = Color::o;
    std::vector<std::string> word;
    std::array<KnotWord, 3> central;

    std::size_t size() const;
    std::string str() const;
    friend bool operator==(const SclNormalForm&, const SclNormalForm&) = default;
    friend auto operator<=>(const SclNormalForm&, const SclNormalForm&) = default;
};

class NormalFormAlgebra {
public:
    NormalFormAlgebra(Pi0Operad op, Generators gens);
    const Pi0Operad& operad() const { return op_; }

    SclNormalForm generator(Color c, const std::string& label) const;
    SclNormalForm unit(Color c) const;
    /// Concatenates o-inputs in the order of a, unions centrals, pushes color-s inputs into slot s.
    SclNormalForm act(const Pi0Op& a, const std::vector<SclNormalForm>& xs) const;
    SclNormalForm mul(const SclNormalForm& a, const SclNormalForm& b) const;
    std::vector<SclNormalForm> elements(Color c, std::size_t max_size) const;
    /// Image of a free element under the comparison map.
    SclNormalForm evaluate(const FreeElement& e) const;

private:
    Pi0Operad op_;
    Generators gens_;
};

SclNormalForm to_normal_form(const LinkNormalForm& l);    // requires braid 0
LinkNormalForm to_link_form(const SclNormalForm& nf);     // requires color o

struct Pi0Report {
    std::string name;
    std::size_t elements = 0;
    std::size_t components = 0;
    std::size_t normal_forms = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Orbit quotient vs normal forms: bijection and action tables up to max_arity.
Pi0Report compare_free_models(OperadKind kind, const Generators& gens, std::size_t max_arity);

/// Builds free cube-operad algebra elements from concrete configurations and checks that their
/// components biject with normal forms of the pi0 free algebra.
Pi0Report pi0_of_free(OperadKind kind, const Generators& gens, std::size_t max_arity);

/// LinkNormalForm (braid 0) against the o-carrier of the free pi0 SCL algebra with
/// A = link labels and B = C = D = knot labels: bijection and multiplication table.
Pi0Report compare_link_monoid(const std::vector<std::string>& link_labels, const std::vector<std::string>& knot_labels,
                              std::size_t max_size);
/// Same against an explicitly given free-algebra alphabet.
Pi0Report compare_link_monoid(const std::vector<std::string>& link_labels, const std::vector<std::string>& knot_labels,
                              std::size_t max_size, const Generators& free_gens);

}  // namespace scl
