// m-blow-ups of cyclic shapes and their inverses.  A blow-up inserts one
// m-block per cyclic gap of a base shape, with full blocks mandatory at
// bottom gaps (the local minima of the graph); differentiation removes
// exactly the inserted material, so membership in B^n(T) is decided by
// the n-fold derivative.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tshape/block.hpp"
#include "tshape/calculus.hpp"
#include "tshape/random.hpp"
#include "tshape/shape.hpp"

namespace tshape {

// Kind of the cyclic gap between letters i and i+1, by the adjacent sign
// pair: (+,-) top, (+,+)/(-,-) middle, (-,+) bottom.
enum class GapKind { top, middle, bottom };

inline GapKind gap_kind_of(char left, char right) {
    if (left == '+' && right == '-') return GapKind::top;
    if (left == '-' && right == '+') return GapKind::bottom;
    return GapKind::middle;
}

// One kind per gap; gap i lies between letter i and letter i+1 (cyclic).
inline std::vector<GapKind> gap_kinds(const Shape& t) {
    const int w = t.width();
    if (w == 0) throw DomainError("empty-shape", "the empty shape has no gaps");
    std::vector<GapKind> kinds;
    kinds.reserve(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i)
        kinds.push_back(gap_kind_of(t.at(i), t.at((i + 1) % w)));
    return kinds;
}

// Base shape, block depth m >= 1, and one m-block per cyclic gap.
struct BlowUpSpec {
    Shape base;
    int depth = 1;
    std::vector<Block> gap_blocks;
};

inline void validate_blow_up_spec(const BlowUpSpec& spec) {
    if (spec.base.empty()) throw DomainError("empty-shape", "blow-up base must be nonempty");
    if (spec.depth < 1) throw DomainError("block-depth-mismatch", "blow-up depth must be >= 1");
    if (static_cast<int>(spec.gap_blocks.size()) != spec.base.width())
        throw DomainError("gap-count", "need exactly one block per gap");
    const std::vector<GapKind> kinds = gap_kinds(spec.base);
    for (int i = 0; i < spec.base.width(); ++i) {
        const Block& b = spec.gap_blocks[static_cast<size_t>(i)];
        if (b.depth() != spec.depth)
            throw DomainError("block-depth-mismatch",
                              "gap " + std::to_string(i) + " block has depth " +
                                  std::to_string(b.depth()) + ", spec has m=" +
                                  std::to_string(spec.depth));
        if (kinds[static_cast<size_t>(i)] == GapKind::bottom && !b.full())
            throw DomainError("fullness-violation",
                              "bottom gap " + std::to_string(i) + " needs a full block");
    }
}

namespace detail {

// Concatenation s_0 b_0 s_1 b_1 ... without validating the spec; the
// canonical form of the resulting cyclic shape is returned.
inline Shape blow_up_unchecked(const BlowUpSpec& spec) {
    std::string out;
    for (int i = 0; i < spec.base.width(); ++i) {
        out += spec.base.at(i);
        out += spec.gap_blocks[static_cast<size_t>(i)].chars();
    }
    return canonical(Shape(std::move(out)));
}

}  // namespace detail

inline Shape blow_up(const BlowUpSpec& spec) {
    validate_blow_up_spec(spec);
    return detail::blow_up_unchecked(spec);
}

// U is an n-blow-up of T exactly when D^n(U) = T; for n = 0 this is
// cyclic equality.
inline bool is_blow_up_of(const Shape& u, const Shape& t, int n) {
    Shape cur = u;
    for (int i = 0; i < n; ++i) cur = derivative(cur);
    return cyclic_equal(cur, t);
}

namespace detail {

// Truncated geometric draw over half-widths in [kmin, kmax], then a
// uniform block of that width from the enumeration pool.
inline Block sample_block(Rng& rng, int m, int kmin, int kmax, bool full) {
    int k = kmin;
    while (k < kmax && rng.coin()) ++k;
    const std::vector<Block> pool = enumerate_blocks(m, 2 * k, full);
    return pool[static_cast<size_t>(rng.uniform(pool.size()))];
}

}  // namespace detail

// Seed-deterministic random m-blow-up of t.  Bottom gaps draw full blocks
// (which need width >= 2m, hence the max_block_width requirement when t
// has a bottom gap); other gaps draw general blocks, possibly empty.
inline std::pair<Shape, BlowUpSpec> random_blow_up(const Shape& t, int m, int max_block_width,
                                                   uint64_t seed) {
    if (t.empty()) throw DomainError("empty-shape", "blow-up base must be nonempty");
    if (m < 1) throw DomainError("block-depth-mismatch", "blow-up depth must be >= 1");
    if (max_block_width < 0) throw DomainError("max-block-width", "negative block width");
    const std::vector<GapKind> kinds = gap_kinds(t);
    const bool has_bottom =
        std::find(kinds.begin(), kinds.end(), GapKind::bottom) != kinds.end();
    if (has_bottom && max_block_width < 2 * m)
        throw DomainError("max-block-width",
                          "a full " + std::to_string(m) + "-block needs width >= " +
                              std::to_string(2 * m));
    detail::Rng rng(seed);
    BlowUpSpec spec{t, m, {}};
    for (GapKind k : kinds) {
        const bool full = (k == GapKind::bottom);
        spec.gap_blocks.push_back(
            detail::sample_block(rng, m, full ? m : 0, max_block_width / 2, full));
    }
    return {blow_up(spec), std::move(spec)};
}

// Constructive inverse of a 1-blow-up.  Deletes all cyclically adjacent
// (-,+) pairs of u simultaneously; the survivors spell the base (anchored
// to u's own letters, not canonicalized) and each maximal deleted chunk is
// a full or general 1-block assigned to the gap after the surviving letter
// it follows.
struct PeelResult {
    Shape base;
    std::vector<Block> gap_blocks;  // 1-blocks

    BlowUpSpec spec() const { return {base, 1, gap_blocks}; }
};

inline PeelResult peel(const Shape& u) {
    const int w = u.width();
    if (w == 0) throw DomainError("derivative-empty", "cannot peel the empty shape");
    std::vector<bool> dead(static_cast<size_t>(w), false);
    for (int i = 0; i < w; ++i)
        if (u.at(i) == '-' && u.at((i + 1) % w) == '+')
            dead[static_cast<size_t>(i)] = dead[static_cast<size_t>((i + 1) % w)] = true;

    std::string base;
    std::vector<int> base_index(static_cast<size_t>(w), -1);
    for (int i = 0; i < w; ++i) {
        if (dead[static_cast<size_t>(i)]) continue;
        base_index[static_cast<size_t>(i)] = static_cast<int>(base.size());
        base += u.at(i);
    }
    if (base.empty())
        throw DomainError("derivative-empty",
                          "derivative is empty (alternating shape has no blow-up base)");

    std::vector<std::string> chunks(base.size());
    // Each surviving letter collects the deleted chunk that follows it, in
    // cyclic order; chunks may wrap past index 0.
    for (int i = 0; i < w; ++i) {
        if (dead[static_cast<size_t>(i)]) continue;
        std::string& c = chunks[static_cast<size_t>(base_index[static_cast<size_t>(i)])];
        for (int j = (i + 1) % w; dead[static_cast<size_t>(j)]; j = (j + 1) % w) c += u.at(j);
    }

    PeelResult res;
    res.base = Shape(std::move(base));
    for (std::string& c : chunks) res.gap_blocks.push_back(Block::make(c, 1));
    return res;
}

}  // namespace tshape
