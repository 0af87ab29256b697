// m-blocks: linear +-1 sequences whose prefix-sum graph runs 0 -> 0 inside
// the band [-m, 0].  A block is "full" when it attains level -m.  Blocks
// are what blow-ups insert into the gaps of a shape; differentiating a
// blow-up peels them back out.
//
// A Block stores its declared depth bound m rather than the tightest
// bound, so "an m-block" and "a full m-block" stay distinct notions.
#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "tshape/error.hpp"

namespace tshape {

class Block {
public:
    Block() = default;  // the empty 0-block

    static Block make(std::string_view signs, int depth_bound) {
        if (depth_bound < 0) throw DomainError("band-violation", "negative depth bound");
        int level = 0;
        for (char c : signs) {
            if (c != '+' && c != '-')
                throw ParseError("invalid sign character '" + std::string(1, c) + "'");
            level += (c == '+') ? +1 : -1;
            if (level > 0)
                throw DomainError("band-violation", "block path rises above level 0");
            if (level < -depth_bound)
                throw DomainError("band-violation", "block path dips below level -m");
        }
        if (level != 0)
            throw DomainError("endpoint", "block path does not return to level 0");
        Block b;
        b.depth_ = depth_bound;
        b.signs_ = std::string(signs);
        return b;
    }

    int depth() const { return depth_; }
    int width() const { return static_cast<int>(signs_.size()); }
    bool empty() const { return signs_.empty(); }
    const std::string& chars() const { return signs_; }
    char at(int i) const { return signs_[static_cast<size_t>(i)]; }

    int min_level() const {
        int level = 0, lo = 0;
        for (char c : signs_) {
            level += (c == '+') ? +1 : -1;
            lo = std::min(lo, level);
        }
        return lo;
    }

    // Vertex levels f(0..width), f(0) = f(width) = 0.
    std::vector<int> levels() const {
        std::vector<int> f{0};
        f.reserve(signs_.size() + 1);
        int level = 0;
        for (char c : signs_) {
            level += (c == '+') ? +1 : -1;
            f.push_back(level);
        }
        return f;
    }

    bool full() const { return min_level() == -depth_; }

    friend bool operator==(const Block&, const Block&) = default;

private:
    int depth_ = 0;
    std::string signs_;
};

inline Block make_block(std::string_view signs, int depth_bound) {
    return Block::make(signs, depth_bound);
}

inline bool is_full(const Block& b) { return b.full(); }

// All m-blocks of the given width in lexicographic order ('-' before '+'
// at equal prefixes).  Odd widths have none.  With full_only, only blocks
// attaining level -m are kept.
inline std::vector<Block> enumerate_blocks(int m, int width, bool full_only = false) {
    std::vector<Block> out;
    if (m < 0 || width < 0 || width % 2 != 0) return out;
    std::string cur;
    // DFS over sign choices; lvl tracks the running level, lo the minimum.
    auto rec = [&](auto&& self, int lvl, int lo) -> void {
        const int remaining = width - static_cast<int>(cur.size());
        if (remaining == 0) {
            if (lvl == 0 && (!full_only || lo == -m)) out.push_back(Block::make(cur, m));
            return;
        }
        if (-lvl > remaining) return;  // cannot climb back to 0 in time
        if (lvl - 1 >= -m) {
            cur += '-';
            self(self, lvl - 1, std::min(lo, lvl - 1));
            cur.pop_back();
        }
        if (lvl + 1 <= 0) {
            cur += '+';
            self(self, lvl + 1, lo);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Linear pair rule: one letter per adjacent same-sign pair, no wrap.
// Maps m-blocks to (m-1)-blocks and full blocks to full blocks; the empty
// 0-block is fixed by convention.
inline Block block_derivative(const Block& b) {
    std::string out;
    for (int i = 0; i + 1 < b.width(); ++i)
        if (b.at(i) == b.at(i + 1)) out += b.at(i);
    return Block::make(out, std::max(b.depth() - 1, 0));
}

// Interior local minima of the block's graph: vertices i (0 < i < width)
// with a descent in and an ascent out.  Endpoints sit at level 0, the top
// of the band, and are never minima.
inline std::vector<int> block_local_minima(const Block& b) {
    std::vector<int> mins;
    for (int i = 1; i < b.width(); ++i)
        if (b.at(i - 1) == '-' && b.at(i) == '+') mins.push_back(i);
    return mins;
}

// Insert one n-block per vertex v_0..v_width (full blocks mandatory at
// interior local minima); the result is an (m+n)-block, full whenever b
// is full.
inline Block block_blow_up(const Block& b, const std::vector<Block>& inserts) {
    if (static_cast<int>(inserts.size()) != b.width() + 1)
        throw DomainError("insert-count", "need exactly one insert per vertex (width+1)");
    const int n = inserts.front().depth();
    for (const Block& ins : inserts)
        if (ins.depth() != n)
            throw DomainError("block-depth-mismatch", "inserts must share one depth bound");
    for (int v : block_local_minima(b))
        if (!inserts[static_cast<size_t>(v)].full())
            throw DomainError("fullness-violation",
                              "insert at local minimum vertex " + std::to_string(v) +
                                  " must be a full block");
    std::string out = inserts.front().chars();
    for (int i = 0; i < b.width(); ++i) {
        out += b.at(i);
        out += inserts[static_cast<size_t>(i) + 1].chars();
    }
    return Block::make(out, b.depth() + n);
}

}  // namespace tshape
