#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scl/cubes.hpp"
#include "scl/scl_operad.hpp"

namespace scl {

/// A label outside the declared alphabet.
class UnknownLabel : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Malformed word text.
class WordSyntaxError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_label(std::string_view s);

/// Multiset of prime-knot labels, kept sorted.
class KnotWord {
public:
    KnotWord() = default;
    explicit KnotWord(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    /// `{3_1,4_1}`
    std::string str() const;
    static KnotWord parse(std::string_view text);

    friend bool operator==(const KnotWord&, const KnotWord&) = default;
    friend auto operator<=>(const KnotWord&, const KnotWord&) = default;

private:
    std::vector<std::string> labels_;
};

KnotWord knot_mul(const KnotWord& a, const KnotWord& b);

/// Ordered word of link primes, three central knot words and a braid count.
struct LinkNormalForm {
    std::vector<std::string> qword;
    std::array<KnotWord, 3> central;  // up, down, updown
    std::int64_t braid = 0;

    KnotWord& central_of(Color s);
    const KnotWord& central_of(Color s) const;
    bool is_central() const { return qword.empty(); }

    /// `[q1.q2|up:{3_1} down:{} both:{}|-2]`, or `[q1.q2||-2]` when no central part is present.
    std::string str() const;
    static LinkNormalForm parse(std::string_view text);

    friend bool operator==(const LinkNormalForm&, const LinkNormalForm&) = default;
    friend auto operator<=>(const LinkNormalForm&, const LinkNormalForm&) = default;
};

LinkNormalForm link_mul(const LinkNormalForm& a, const LinkNormalForm& b);
/// Throws std::invalid_argument for s = o.
LinkNormalForm phi(Color s, const KnotWord& k);
LinkNormalForm braid_unit(std::int64_t n);
LinkNormalForm link_letter(const std::string& q);

/// Declared label sets; an absent set accepts any label.
struct Alphabets {
    std::optional<std::set<std::string>> knot;
    std::optional<std::set<std::string>> link;

    void check(const KnotWord& k) const;
    void check(const LinkNormalForm& l) const;
};

KnotWord knot_mul(const KnotWord& a, const KnotWord& b, const Alphabets& alpha);
LinkNormalForm link_mul(const LinkNormalForm& a, const LinkNormalForm& b, const Alphabets& alpha);

}  // namespace scl
