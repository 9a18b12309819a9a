#include "scl/monoids.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace scl {

bool is_label(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '\'' || c == '#' || c == '*' || c == '+' || c == '-';
    });
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

std::string checked_label(std::string_view s) {
    s = trim(s);
    if (!is_label(s)) throw WordSyntaxError("bad label '" + std::string(s) + "'");
    return std::string(s);
}

std::size_t central_index(Color s) {
    switch (s) {
        case Color::up: return 0;
        case Color::down: return 1;
        case Color::updown: return 2;
        case Color::o: break;
    }
    throw std::invalid_argument("the o color has no central component");
}

const char* central_name(std::size_t i) { return i == 0 ? "up" : i == 1 ? "down" : "both"; }

}  // namespace

KnotWord::KnotWord(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (const auto& l : labels_)
        if (!is_label(l)) throw WordSyntaxError("bad label '" + l + "'");
    std::sort(labels_.begin(), labels_.end());
}

std::string KnotWord::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) s += ',';
        s += labels_[i];
    }
    return s + "}";
}

KnotWord KnotWord::parse(std::string_view text) {
    auto t = trim(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw WordSyntaxError("knot word must look like {a,b,...}");
    auto body = trim(t.substr(1, t.size() - 2));
    std::vector<std::string> labels;
    if (!body.empty())
        for (auto part : split(body, ',')) labels.push_back(checked_label(part));
    return KnotWord(std::move(labels));
}

KnotWord knot_mul(const KnotWord& a, const KnotWord& b) {
    auto l = a.labels();
    l.insert(l.end(), b.labels().begin(), b.labels().end());
    return KnotWord(std::move(l));
}

KnotWord& LinkNormalForm::central_of(Color s) { return central[central_index(s)]; }
const KnotWord& LinkNormalForm::central_of(Color s) const { return central[central_index(s)]; }

std::string LinkNormalForm::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < qword.size(); ++i) {
        if (i) s += '.';
        s += qword[i];
    }
    s += '|';
    bool any = std::any_of(central.begin(), central.end(), [](const KnotWord& k) { return !k.empty(); });
    if (any)
        for (std::size_t i = 0; i < 3; ++i) {
            if (i) s += ' ';
            s += central_name(i);
            s += ':';
            s += central[i].str();
        }
    s += '|';
    s += std::to_string(braid);
    return s + "]";
}

LinkNormalForm LinkNormalForm::parse(std::string_view text) {
    auto t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw WordSyntaxError("link word must look like [q|...|n]");
    auto parts = split(t.substr(1, t.size() - 2), '|');
    if (parts.size() != 3) throw WordSyntaxError("link word needs exactly three '|'-separated parts");
    LinkNormalForm l;

    auto q = trim(parts[0]);
    if (!q.empty())
        for (auto p : split(q, '.')) l.qword.push_back(checked_label(p));

    auto c = trim(parts[1]);
    std::array<bool, 3> seen{};
    while (!c.empty()) {
        auto colon = c.find(':');
        auto close = c.find('}');
        if (colon == std::string_view::npos || close == std::string_view::npos || close < colon)
            throw WordSyntaxError("central part must look like up:{...} down:{...} both:{...}");
        auto name = trim(c.substr(0, colon));
        Color s;
        try {
            s = color_from_string(std::string(name));
        } catch (const std::invalid_argument&) {
            throw WordSyntaxError("unknown central slot '" + std::string(name) + "'");
        }
        if (s == Color::o) throw WordSyntaxError("the o color has no central slot");
        auto idx = central_index(s);
        if (seen[idx]) throw WordSyntaxError("central slot given twice");
        seen[idx] = true;
        l.central[idx] = KnotWord::parse(c.substr(colon + 1, close - colon));
        c = trim(c.substr(close + 1));
    }

    auto b = trim(parts[2]);
    if (b.substr(0, 2) == "b:") b = trim(b.substr(2));
    if (!b.empty() && b.front() == '+') b.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(b.data(), b.data() + b.size(), l.braid);
    if (b.empty() || ec != std::errc() || ptr != b.data() + b.size())
        throw WordSyntaxError("braid part must be an integer, got '" + std::string(b) + "'");
    return l;
}

LinkNormalForm link_mul(const LinkNormalForm& a, const LinkNormalForm& b) {
    LinkNormalForm r = a;
    r.qword.insert(r.qword.end(), b.qword.begin(), b.qword.end());
    for (std::size_t i = 0; i < 3; ++i) r.central[i] = knot_mul(a.central[i], b.central[i]);
    if (__builtin_add_overflow(a.braid, b.braid, &r.braid)) throw std::overflow_error("braid count overflow");
    return r;
}

LinkNormalForm phi(Color s, const KnotWord& k) {
    LinkNormalForm l;
    l.central_of(s) = k;
    return l;
}

LinkNormalForm braid_unit(std::int64_t n) {
    LinkNormalForm l;
    l.braid = n;
    return l;
}

LinkNormalForm link_letter(const std::string& q) {
    if (!is_label(q)) throw WordSyntaxError("bad label '" + q + "'");
    LinkNormalForm l;
    l.qword.push_back(q);
    return l;
}

void Alphabets::check(const KnotWord& k) const {
    if (!knot) return;
    for (const auto& l : k.labels())
        if (!knot->count(l)) throw UnknownLabel("knot label '" + l + "' is not in the declared alphabet");
}

void Alphabets::check(const LinkNormalForm& l) const {
    if (link)
        for (const auto& q : l.qword)
            if (!link->count(q)) throw UnknownLabel("link label '" + q + "' is not in the declared alphabet");
    for (const auto& k : l.central) check(k);
}

KnotWord knot_mul(const KnotWord& a, const KnotWord& b, const Alphabets& alpha) {
    alpha.check(a);
    alpha.check(b);
    return knot_mul(a, b);
}

LinkNormalForm link_mul(const LinkNormalForm& a, const LinkNormalForm& b, const Alphabets& alpha) {
    alpha.check(a);
    alpha.check(b);
    return link_mul(a, b);
}

}  // namespace scl
