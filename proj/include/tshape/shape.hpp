// Cyclic t-shapes: sequences over {+1,-1} read cyclically, with canonical
// rotation, inversion, run decomposition and graph traces.
//
// A shape is stored as its linear spelling ('+'/'-' characters); two
// spellings denote the same cyclic shape when one is a rotation of the
// other.  Equality on Shape is letter-exact; use cyclic_equal() or compare
// canonical() forms for rotation-invariant identity.  The empty shape is a
// legal value and is spelled "0" in text form.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tshape/error.hpp"

namespace tshape {

class Shape {
public:
    Shape() = default;

    explicit Shape(std::string signs) : signs_(std::move(signs)) {
        for (char c : signs_) {
            if (c != '+' && c != '-')
                throw ParseError("invalid sign character '" + std::string(1, c) + "'");
        }
    }

    int width() const { return static_cast<int>(signs_.size()); }
    bool empty() const { return signs_.empty(); }

    // Sign of letter i as +1/-1; i must be in [0, width).
    int sign(int i) const { return signs_[static_cast<size_t>(i)] == '+' ? +1 : -1; }
    char at(int i) const { return signs_[static_cast<size_t>(i)]; }

    const std::string& chars() const { return signs_; }

    // Letter-exact comparison; '+' < '-' holds in ASCII, so the default
    // lexicographic order is the canonical-form order used throughout.
    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::string signs_;
};

// The cyclic run decomposition t^{r1} t^{-r2} ...  Signs alternate starting
// with start_sign; the run containing letter 0 (extended backwards across
// the wrap) comes first.  u = run_lengths.size(): 0 for the empty shape,
// 1 exactly for powers, even otherwise.
struct RunForm {
    int start_sign = +1;
    std::vector<int> run_lengths;

    int run_count() const { return static_cast<int>(run_lengths.size()); }
    int sign_of_run(int i) const { return (i % 2 == 0) ? start_sign : -start_sign; }
};

// Prefix-sum trace of a shape's graph: points (i, f(i)) for i = 0..w with
// f(0) = 0, f(w) = degree and unit steps.
struct GraphTrace {
    std::vector<std::pair<int, int>> points;

    int min_level() const {
        int m = 0;
        for (const auto& [i, lvl] : points) m = std::min(m, lvl);
        return m;
    }
    int max_level() const {
        int m = 0;
        for (const auto& [i, lvl] : points) m = std::max(m, lvl);
        return m;
    }
};

inline int width(const Shape& s) { return s.width(); }

inline int degree(const Shape& s) {
    int d = 0;
    for (int i = 0; i < s.width(); ++i) d += s.sign(i);
    return d;
}

// (width, degree) in one call.
inline std::pair<int, int> measures(const Shape& s) { return {width(s), degree(s)}; }

// Left-rotation by j: letter i of the result is letter (i + j) mod w of s.
inline Shape rotate(const Shape& s, int j) {
    const int w = s.width();
    if (w == 0) return s;
    j = ((j % w) + w) % w;
    std::string out = s.chars().substr(static_cast<size_t>(j)) +
                      s.chars().substr(0, static_cast<size_t>(j));
    return Shape(std::move(out));
}

// Word inversion: reverse the letters and negate every sign.  Preserves
// width, negates degree, and is an involution up to rotation.
inline Shape invert(const Shape& s) {
    std::string out(s.chars().rbegin(), s.chars().rend());
    for (char& c : out) c = (c == '+') ? '-' : '+';
    return Shape(std::move(out));
}

namespace detail {

// Booth's least-rotation algorithm; returns the start index of the
// lexicographically least rotation of s.
inline size_t least_rotation_index(std::string_view s) {
    if (s.size() < 2) return 0;
    const size_t n = s.size();
    std::string t;
    t.reserve(2 * n);
    t.append(s);
    t.append(s);
    std::vector<ptrdiff_t> fail(2 * n, -1);
    size_t k = 0;
    for (size_t j = 1; j < 2 * n; ++j) {
        const char cj = t[j];
        ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && cj != t[k + static_cast<size_t>(i) + 1]) {
            if (cj < t[k + static_cast<size_t>(i) + 1]) k = j - static_cast<size_t>(i) - 1;
            i = fail[static_cast<size_t>(i)];
        }
        if (cj != t[k + static_cast<size_t>(i) + 1]) {
            if (cj < t[k]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

}  // namespace detail

// Canonical representative of the cyclic shape: the lexicographically least
// rotation under '+' < '-'.  Idempotent and rotation-invariant.
inline Shape canonical(const Shape& s) {
    return rotate(s, static_cast<int>(detail::least_rotation_index(s.chars())));
}

inline bool cyclic_equal(const Shape& a, const Shape& b) {
    return a.width() == b.width() && canonical(a) == canonical(b);
}

// Cyclic run decomposition; wrap-around runs are merged, so the first run
// is the one containing letter 0 extended backwards across the wrap.
inline RunForm runs(const Shape& s) {
    RunForm rf;
    const int w = s.width();
    if (w == 0) return rf;
    rf.start_sign = s.sign(0);
    bool power = true;
    for (int i = 1; i < w; ++i)
        if (s.sign(i) != rf.start_sign) { power = false; break; }
    if (power) {
        rf.run_lengths.push_back(w);
        return rf;
    }
    // Start scanning at the first letter of the run containing letter 0,
    // walking backwards across the wrap while the sign persists.
    int start = 0;
    while (s.sign((start + w - 1) % w) == s.sign(start)) start = (start + w - 1) % w;
    rf.start_sign = s.sign(start);
    int i = start, remaining = w;
    while (remaining > 0) {
        const int sign = s.sign(i);
        int len = 0;
        while (len < remaining && s.sign((i + len) % w) == sign) ++len;
        rf.run_lengths.push_back(len);
        i = (i + len) % w;
        remaining -= len;
    }
    return rf;
}

inline GraphTrace graph_trace(const Shape& s) {
    GraphTrace tr;
    tr.points.reserve(static_cast<size_t>(s.width()) + 1);
    int level = 0;
    tr.points.emplace_back(0, 0);
    for (int i = 0; i < s.width(); ++i) {
        level += s.sign(i);
        tr.points.emplace_back(i + 1, level);
    }
    return tr;
}

enum class ShapeStyle { compact, runs };

// Text form.  Compact: one character per letter, "0" for the empty shape.
// Runs: the linear (non-cyclic) run decomposition of the stored spelling,
// e.g. "++-" -> "t^2 t^-1".
inline std::string format_shape(const Shape& s, ShapeStyle style = ShapeStyle::compact) {
    if (s.empty()) return "0";
    if (style == ShapeStyle::compact) return s.chars();
    std::string out;
    int i = 0;
    const int w = s.width();
    while (i < w) {
        const int sign = s.sign(i);
        int len = 1;
        while (i + len < w && s.sign(i + len) == sign) ++len;
        if (!out.empty()) out += ' ';
        if (sign > 0)
            out += (len == 1) ? "t" : "t^" + std::to_string(len);
        else
            out += "t^-" + std::to_string(len);
        i += len;
    }
    return out;
}

namespace detail {

// Parses "t", "t^k" or "t^-k" (k >= 1); returns the signed exponent.
inline long long parse_t_exponent(std::string_view tok) {
    if (tok == "t") return 1;
    if (tok.size() < 3 || tok[0] != 't' || tok[1] != '^')
        throw ParseError("bad t-token '" + std::string(tok) + "'");
    std::string_view num = tok.substr(2);
    bool neg = false;
    if (!num.empty() && num[0] == '-') { neg = true; num = num.substr(1); }
    if (num.empty() || num[0] == '0')
        throw ParseError("bad exponent in '" + std::string(tok) + "'");
    long long value = 0;
    for (char c : num) {
        if (c < '0' || c > '9')
            throw ParseError("bad exponent in '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
        if (value > 1000000) throw ParseError("exponent too large in '" + std::string(tok) + "'");
    }
    return neg ? -value : value;
}

inline std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace detail

// Parses compact notation (a string over '+','-'), run notation
// (whitespace-separated "t" / "t^k" / "t^-k"), or the literal "0" for the
// empty shape.  No canonicalization is applied.
inline Shape parse_shape(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text == "0") return Shape{};
    if (text.empty()) throw ParseError("empty shape text (use \"0\" for the empty shape)");
    if (text.find_first_not_of("+-") == std::string_view::npos)
        return Shape(std::string(text));
    std::string out;
    for (std::string_view tok : detail::split_ws(text)) {
        if (tok[0] != 't') throw ParseError("unparseable shape '" + std::string(text) + "'");
        const long long e = detail::parse_t_exponent(tok);
        out.append(static_cast<size_t>(std::llabs(e)), e > 0 ? '+' : '-');
    }
    if (out.empty()) throw ParseError("unparseable shape '" + std::string(text) + "'");
    return Shape(std::move(out));
}

}  // namespace tshape
