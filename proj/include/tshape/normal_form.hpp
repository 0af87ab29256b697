// Words in normal form over a base shape: one m-block per cyclic gap,
// decorated with designated cancellations.  A block may declare part of
// its leading t^-1...t^-1 string and trailing t...t string as cancelling;
// realizing the word concatenates base letters and blocks and performs
// exactly those cancellations (each designated letter consumes one
// adjacent opposite letter, cascading as earlier cancellations expose new
// neighbours).
//
// Gap conditions: bottom gaps take a full block and no cancellation;
// middle gaps take any block and any declared strings; top gaps require
// the block's residual path (after deleting the designated strings) to
// meet level 0 at some vertex.  On top of these per-gap conditions,
// validity requires the declared cancellations to be realizable: the
// directed reduction must remove exactly two letters per designated one.
//
// The simplification move re-brackets one leading cancellation (or, by
// mirror symmetry, one trailing cancellation): splitting the block D as
// t^-1 B t C at the first return of its path to level 0, the cancelled
// pair disappears, B migrates into the previous gap's block, the t is
// re-identified with the base letter, and C remains in place.  Iterating
// the move drains all cancellations without changing the realized shape.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tshape/block.hpp"
#include "tshape/blowup.hpp"
#include "tshape/random.hpp"
#include "tshape/shape.hpp"

namespace tshape {

struct NFInsertion {
    Block block;
    int lead_cancel = 0;   // designated letters of the initial t^-1-string
    int trail_cancel = 0;  // designated letters of the final t-string

    int cancellations() const { return lead_cancel + trail_cancel; }
};

struct NormalFormWord {
    Shape base;
    int depth = 1;  // m
    std::vector<NFInsertion> insertions;  // one per cyclic gap of base

    int total_cancellations() const {
        int n = 0;
        for (const NFInsertion& ins : insertions) n += ins.cancellations();
        return n;
    }
};

namespace detail {

inline int leading_minus_run(const Block& b) {
    int n = 0;
    while (n < b.width() && b.at(n) == '-') ++n;
    return n;
}

inline int trailing_plus_run(const Block& b) {
    int n = 0;
    while (n < b.width() && b.at(b.width() - 1 - n) == '+') ++n;
    return n;
}

// X condition for top gaps: the path left after deleting the designated
// leading and trailing strings attains level 0 at some vertex (measured in
// the block's own coordinates).
inline bool residual_meets_zero(const Block& b, int lead, int trail) {
    const std::vector<int> f = b.levels();
    for (int v = lead; v <= b.width() - trail; ++v)
        if (f[static_cast<size_t>(v)] == 0) return true;
    return false;
}

enum class Mark : unsigned char { none, lead, trail };

struct NFLetter {
    char sign;
    Mark mark;
};

// Concatenation s_0 b_0 s_1 b_1 ... with designated letters marked.
inline std::vector<NFLetter> nf_letters(const NormalFormWord& w) {
    std::vector<NFLetter> ls;
    for (int i = 0; i < w.base.width(); ++i) {
        ls.push_back({w.base.at(i), Mark::none});
        const NFInsertion& ins = w.insertions[static_cast<size_t>(i)];
        const int len = ins.block.width();
        for (int p = 0; p < len; ++p) {
            Mark m = Mark::none;
            if (p < ins.lead_cancel)
                m = Mark::lead;
            else if (p >= len - ins.trail_cancel)
                m = Mark::trail;
            ls.push_back({ins.block.at(p), m});
        }
    }
    return ls;
}

struct Reduction {
    std::string reduced;  // survivors in original order
    int removed = 0;
};

// Directed cancellation on the cyclic word: lead-marked letters cancel
// against their current left neighbour, trail-marked against their right
// neighbour, whenever the signs are opposite.  Runs to a fixpoint; on a
// valid word this removes each designated letter with exactly one partner.
inline Reduction reduce_designated(const std::vector<NFLetter>& ls) {
    const int n = static_cast<int>(ls.size());
    Reduction red;
    if (n == 0) return red;
    std::vector<int> prev(static_cast<size_t>(n)), next(static_cast<size_t>(n));
    std::vector<bool> alive(static_cast<size_t>(n), true);
    for (int i = 0; i < n; ++i) {
        prev[static_cast<size_t>(i)] = (i + n - 1) % n;
        next[static_cast<size_t>(i)] = (i + 1) % n;
    }
    int alive_count = n;
    const auto unlink = [&](int a) {
        alive[static_cast<size_t>(a)] = false;
        next[static_cast<size_t>(prev[static_cast<size_t>(a)])] = next[static_cast<size_t>(a)];
        prev[static_cast<size_t>(next[static_cast<size_t>(a)])] = prev[static_cast<size_t>(a)];
        --alive_count;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 0; p < n; ++p) {
            if (!alive[static_cast<size_t>(p)] || ls[static_cast<size_t>(p)].mark == Mark::none)
                continue;
            if (alive_count < 2) break;
            const int q = ls[static_cast<size_t>(p)].mark == Mark::lead
                              ? prev[static_cast<size_t>(p)]
                              : next[static_cast<size_t>(p)];
            if (q == p || ls[static_cast<size_t>(q)].sign == ls[static_cast<size_t>(p)].sign)
                continue;
            unlink(p);
            unlink(q);
            red.removed += 2;
            changed = true;
        }
    }
    for (int i = 0; i < n; ++i)
        if (alive[static_cast<size_t>(i)]) red.reduced += ls[static_cast<size_t>(i)].sign;
    return red;
}

}  // namespace detail

// All violated conditions, as human-readable strings; empty means valid.
inline std::vector<std::string> validate_nf(const NormalFormWord& w) {
    std::vector<std::string> out;
    if (w.base.empty()) {
        out.push_back("base shape is empty");
        return out;
    }
    if (w.depth < 1) out.push_back("depth m must be >= 1");
    if (static_cast<int>(w.insertions.size()) != w.base.width()) {
        out.push_back("need exactly one insertion per gap");
        return out;
    }
    const std::vector<GapKind> kinds = gap_kinds(w.base);
    for (int i = 0; i < w.base.width(); ++i) {
        const NFInsertion& ins = w.insertions[static_cast<size_t>(i)];
        const std::string gap = "gap " + std::to_string(i);
        if (ins.block.depth() != w.depth) out.push_back(gap + ": block depth differs from m");
        if (ins.lead_cancel < 0 || ins.lead_cancel > detail::leading_minus_run(ins.block))
            out.push_back(gap + ": lead_cancel exceeds the leading t^-1-string");
        if (ins.trail_cancel < 0 || ins.trail_cancel > detail::trailing_plus_run(ins.block))
            out.push_back(gap + ": trail_cancel exceeds the trailing t-string");
        switch (kinds[static_cast<size_t>(i)]) {
            case GapKind::bottom:
                if (!ins.block.full()) out.push_back(gap + ": bottom gap needs a full block");
                if (ins.cancellations() != 0)
                    out.push_back(gap + ": no cancellation can take place at bottom gaps");
                break;
            case GapKind::top:
                if (ins.lead_cancel >= 0 && ins.trail_cancel >= 0 &&
                    ins.lead_cancel <= ins.block.width() - ins.trail_cancel &&
                    !detail::residual_meets_zero(ins.block, ins.lead_cancel, ins.trail_cancel))
                    out.push_back(gap + ": residual path never meets level 0");
                break;
            case GapKind::middle:
                break;
        }
    }
    if (!out.empty()) return out;
    const detail::Reduction red = detail::reduce_designated(detail::nf_letters(w));
    const int expected = 2 * w.total_cancellations();
    if (red.removed != expected)
        out.push_back("free reduction removed " + std::to_string(red.removed) +
                      " letters, declared cancellations require " + std::to_string(expected));
    return out;
}

// Canonical reduced cyclic shape of the word.  With all cancellation
// counts zero this coincides with blow_up on the same data.
inline Shape realize(const NormalFormWord& w) {
    const std::vector<std::string> viol = validate_nf(w);
    if (!viol.empty()) throw DomainError("invalid-nf", viol.front());
    detail::Reduction red = detail::reduce_designated(detail::nf_letters(w));
    return canonical(Shape(std::move(red.reduced)));
}

namespace detail {

inline Block reverse_negate(const Block& b) {
    std::string out(b.chars().rbegin(), b.chars().rend());
    for (char& c : out) c = (c == '+') ? '-' : '+';
    return Block::make(out, b.depth());
}

// Mirror image of the word: base inverted, blocks reversed and negated,
// lead/trail swapped, gaps re-indexed.  An involution; realize commutes
// with shape inversion across it.
inline NormalFormWord mirror_nf(const NormalFormWord& w) {
    const int wd = w.base.width();
    NormalFormWord m;
    m.base = invert(w.base);
    m.depth = w.depth;
    m.insertions.resize(static_cast<size_t>(wd));
    for (int k = 0; k < wd; ++k) {
        const NFInsertion& ins = w.insertions[static_cast<size_t>(k)];
        const int j = ((wd - 2 - k) % wd + wd) % wd;
        m.insertions[static_cast<size_t>(j)] =
            NFInsertion{reverse_negate(ins.block), ins.trail_cancel, ins.lead_cancel};
    }
    return m;
}

inline int mirror_gap(int g, int wd) { return ((wd - 2 - g) % wd + wd) % wd; }

struct MarkedLetter {
    char sign;
    Mark mark;
};

// Splits a block D starting with '-' as D = '-' B '+' C at the first
// return of its path to level 0.  B is an (m-1)-block relative to level
// -1; C is an m-block.
inline std::pair<std::string, std::string> lead_split(const Block& d) {
    const std::vector<int> f = d.levels();
    int j = 0;
    for (int v = 1; v <= d.width(); ++v)
        if (f[static_cast<size_t>(v)] == 0) {
            j = v;
            break;
        }
    return {d.chars().substr(1, static_cast<size_t>(j) - 2),
            d.chars().substr(static_cast<size_t>(j))};
}

inline NormalFormWord lead_move(const NormalFormWord& w, int g);

}  // namespace detail

// Applies one simplification move to the first gap carrying a designated
// cancellation, preserving the realized shape exactly and strictly
// decreasing the total cancellation count.  Iterating reaches a
// zero-cancellation word (a plain blow-up) in at most total_cancellations
// steps.
inline NormalFormWord nf_simplify(const NormalFormWord& w) {
    {
        const std::vector<std::string> viol = validate_nf(w);
        if (!viol.empty()) throw DomainError("invalid-nf", viol.front());
    }
    for (int g = 0; g < w.base.width(); ++g) {
        const NFInsertion& ins = w.insertions[static_cast<size_t>(g)];
        if (ins.lead_cancel > 0) return detail::lead_move(w, g);
        if (ins.trail_cancel > 0)
            return detail::mirror_nf(
                detail::lead_move(detail::mirror_nf(w), detail::mirror_gap(g, w.base.width())));
    }
    throw DomainError("no-cancellation", "word has no designated cancellation");
}

namespace detail {

inline NormalFormWord lead_move(const NormalFormWord& w, int g) {
    const int wd = w.base.width();
    const NFInsertion& ins = w.insertions[static_cast<size_t>(g)];
    const Block& d = ins.block;
    const int lead = ins.lead_cancel;
    const int trail = ins.trail_cancel;
    const auto fail = [&](const std::string& why) -> DomainError {
        return DomainError("decomposition-failure",
                           "gap " + std::to_string(g) + ": " + why);
    };
    if (d.empty() || d.at(0) != '-' || lead < 1) throw fail("no leading t^-1 to cancel");
    if (w.base.at(g) != '+') throw fail("cancelled t^-1 has no t partner in the base");

    const auto [bpart, cpart] = lead_split(d);
    if (trail > static_cast<int>(cpart.size()))
        throw fail("trailing string crosses the re-identified base letter");

    // Assemble the destination block with migrating marks.  For a base of
    // width >= 2, B lands after the previous gap's block; a width-1 base
    // has a single gap, where C then B follow the base letter.
    const int prev = (g + wd - 1) % wd;
    std::vector<MarkedLetter> left, right;
    if (prev == g) {
        for (size_t p = 0; p < cpart.size(); ++p)
            left.push_back({cpart[p],
                            p + static_cast<size_t>(trail) >= cpart.size() ? Mark::trail
                                                                           : Mark::none});
    } else {
        const NFInsertion& pi = w.insertions[static_cast<size_t>(prev)];
        const int plen = pi.block.width();
        for (int p = 0; p < plen; ++p) {
            Mark m = Mark::none;
            if (p < pi.lead_cancel)
                m = Mark::lead;
            else if (p >= plen - pi.trail_cancel)
                m = Mark::trail;
            left.push_back({pi.block.at(p), m});
        }
    }
    for (size_t p = 0; p < bpart.size(); ++p)
        right.push_back({bpart[p], p + 1 < static_cast<size_t>(lead) ? Mark::lead : Mark::none});

    // Junction resolution: marks that would sit mid-block cancel here, in
    // the same pairs the word's own reduction would form.
    size_t ri = 0;
    while (!left.empty() && ri < right.size()) {
        const MarkedLetter& a = left.back();
        const MarkedLetter& b = right[ri];
        const bool a_trail = (a.mark == Mark::trail);
        const bool b_lead = (b.mark == Mark::lead);
        if (!a_trail && !b_lead) break;
        if (a_trail && b_lead) throw fail("designated strings cancel each other");
        if (a.sign == b.sign) throw fail("designated letter has no opposite partner");
        left.pop_back();
        ++ri;
    }
    std::vector<MarkedLetter> k = std::move(left);
    k.insert(k.end(), right.begin() + static_cast<ptrdiff_t>(ri), right.end());

    size_t new_lead = 0;
    while (new_lead < k.size() && k[new_lead].mark == Mark::lead) ++new_lead;
    size_t new_trail = 0;
    while (new_lead + new_trail < k.size() && k[k.size() - 1 - new_trail].mark == Mark::trail)
        ++new_trail;
    for (size_t p = new_lead; p < k.size() - new_trail; ++p)
        if (k[p].mark != Mark::none) throw fail("cancellation mark stranded mid-block");

    std::string kchars;
    for (const MarkedLetter& ml : k) kchars += ml.sign;

    NormalFormWord out = w;
    if (prev == g) {
        out.insertions[static_cast<size_t>(g)] = NFInsertion{
            Block::make(kchars, w.depth), static_cast<int>(new_lead),
            static_cast<int>(new_trail)};
    } else {
        out.insertions[static_cast<size_t>(prev)] = NFInsertion{
            Block::make(kchars, w.depth), static_cast<int>(new_lead),
            static_cast<int>(new_trail)};
        out.insertions[static_cast<size_t>(g)] =
            NFInsertion{Block::make(cpart, w.depth), 0, trail};
    }
    const std::vector<std::string> viol = validate_nf(out);
    if (!viol.empty()) throw fail("result invalid: " + viol.front());
    return out;
}

}  // namespace detail

// Seed-deterministic valid normal-form word over t: blocks drawn as in
// random_blow_up, then for each non-bottom gap a designated cancellation
// is tossed on each side whose adjacent base letter can absorb it (a '+'
// on the left for lead, a '-' on the right for trail), downgraded where
// the top-gap residual condition objects.
inline NormalFormWord random_nf(const Shape& t, int m, int max_block_width, uint64_t seed) {
    if (t.empty()) throw DomainError("empty-shape", "normal-form base must be nonempty");
    if (m < 1) throw DomainError("block-depth-mismatch", "depth m must be >= 1");
    const std::vector<GapKind> kinds = gap_kinds(t);
    const bool has_bottom =
        std::find(kinds.begin(), kinds.end(), GapKind::bottom) != kinds.end();
    if (has_bottom && max_block_width < 2 * m)
        throw DomainError("max-block-width",
                          "a full " + std::to_string(m) + "-block needs width >= " +
                              std::to_string(2 * m));
    detail::Rng rng(seed);
    NormalFormWord w{t, m, {}};
    const int wd = t.width();
    for (int i = 0; i < wd; ++i) {
        const GapKind kind = kinds[static_cast<size_t>(i)];
        const bool full = (kind == GapKind::bottom);
        Block b = detail::sample_block(rng, m, full ? m : 0, max_block_width / 2, full);
        int lead = 0, trail = 0;
        if (kind != GapKind::bottom && !b.empty()) {
            if (t.at(i) == '+' && rng.coin()) lead = 1;
            if (t.at((i + 1) % wd) == '-' && rng.coin()) trail = 1;
            if (kind == GapKind::top && !detail::residual_meets_zero(b, lead, trail)) {
                trail = 0;
                if (!detail::residual_meets_zero(b, lead, trail)) lead = 0;
            }
        }
        w.insertions.push_back({std::move(b), lead, trail});
    }
    if (!validate_nf(w).empty())
        throw std::logic_error("random_nf produced an invalid word");
    return w;
}

}  // namespace tshape
