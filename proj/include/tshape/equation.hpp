// Equation words g1 t^{e1} g2 t^{e2} ... over opaque coefficients, and
// extraction of their t-shape.  Coefficients are identifiers assumed
// non-trivial; no group arithmetic is modeled.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tshape/shape.hpp"

namespace tshape {

struct EquationToken {
    bool is_t = false;
    int exponent = 0;       // +1/-1 when is_t
    std::string coefficient;  // identifier when !is_t
};

// Token sequence with |exponent| > 1 t-powers already expanded to repeated
// +-1 letters.  Contains at least one t-letter.
struct EquationWord {
    std::vector<EquationToken> tokens;

    int t_count() const {
        int n = 0;
        for (const auto& t : tokens) n += t.is_t ? 1 : 0;
        return n;
    }
};

namespace detail {

inline bool is_identifier(std::string_view tok) {
    if (tok.empty()) return false;
    const auto alpha = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    const auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(tok[0])) return false;
    for (char c : tok.substr(1))
        if (!alnum(c)) return false;
    return tok != "t";  // bare t is the variable, never a coefficient
}

}  // namespace detail

// Whitespace-separated tokens: `t` / `t^<nonzero int>` are t-letters,
// identifiers are coefficients.  Requires at least one t-letter.
inline EquationWord parse_equation(std::string_view text) {
    EquationWord w;
    for (std::string_view tok : detail::split_ws(text)) {
        if (tok == "t" || (tok.size() > 2 && tok[0] == 't' && tok[1] == '^')) {
            const long long e = detail::parse_t_exponent(tok);
            for (long long i = 0; i < std::llabs(e); ++i)
                w.tokens.push_back({true, e > 0 ? +1 : -1, {}});
        } else if (detail::is_identifier(tok)) {
            w.tokens.push_back({false, 0, std::string(tok)});
        } else {
            throw ParseError("bad equation token '" + std::string(tok) + "'");
        }
    }
    if (w.t_count() == 0) throw ParseError("equation contains no t-letter");
    return w;
}

// The sequence of t-exponents of w, in order.  Fails when two t-letters of
// opposite exponent are cyclically adjacent with no coefficient between
// them (the word is then not cyclically reduced).
inline Shape extract_shape(const EquationWord& w) {
    std::vector<int> t_positions;
    for (size_t i = 0; i < w.tokens.size(); ++i)
        if (w.tokens[i].is_t) t_positions.push_back(static_cast<int>(i));
    if (t_positions.empty()) throw DomainError("no-t-letter", "equation contains no t-letter");

    const int n = static_cast<int>(w.tokens.size());
    const int k = static_cast<int>(t_positions.size());
    std::string signs;
    for (int j = 0; j < k; ++j) {
        const EquationToken& cur = w.tokens[static_cast<size_t>(t_positions[static_cast<size_t>(j)])];
        signs += cur.exponent > 0 ? '+' : '-';
        // Scan the cyclic gap to the next t-letter for a coefficient.
        const int from = t_positions[static_cast<size_t>(j)];
        const int to = t_positions[static_cast<size_t>((j + 1) % k)];
        const EquationToken& nxt = w.tokens[static_cast<size_t>(to)];
        if (cur.exponent == -nxt.exponent) {
            bool separated = false;
            for (int p = (from + 1) % n; p != to; p = (p + 1) % n)
                if (!w.tokens[static_cast<size_t>(p)].is_t) { separated = true; break; }
            if (!separated)
                throw DomainError("not-cyclically-reduced",
                                  "t and t^-1 cyclically adjacent with no coefficient between");
        }
    }
    return Shape(std::move(signs));
}

}  // namespace tshape
