// Test-only helpers: independent oracles and small generators.  These stay
// deliberately naive so they cannot share bugs with the library code they
// check.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tshape/random.hpp"
#include "tshape/shape.hpp"

namespace testutil {

// Oracle for canonical(): enumerate every rotation, take the minimum.
inline tshape::Shape naive_canonical(const tshape::Shape& s) {
    tshape::Shape best = s;
    for (int j = 1; j < s.width(); ++j) {
        tshape::Shape r = tshape::rotate(s, j);
        if (r < best) best = r;
    }
    return best;
}

// All sign strings of the given width, as shapes, in numeric order
// ('+' = 0 bit, most significant bit first).
inline std::vector<tshape::Shape> all_shapes(int width) {
    std::vector<tshape::Shape> out;
    for (uint64_t x = 0; x < (uint64_t{1} << width); ++x) {
        std::string s(static_cast<size_t>(width), '+');
        for (int i = 0; i < width; ++i)
            if (x & (uint64_t{1} << (width - 1 - i))) s[static_cast<size_t>(i)] = '-';
        out.emplace_back(std::move(s));
    }
    return out;
}

inline tshape::Shape random_shape(tshape::detail::Rng& rng, int min_width, int max_width) {
    const int w = min_width + static_cast<int>(rng.uniform(
                                  static_cast<uint64_t>(max_width - min_width + 1)));
    std::string s;
    for (int i = 0; i < w; ++i) s += rng.coin() ? '+' : '-';
    return tshape::Shape(std::move(s));
}

// Oracle for enumerate_blocks: filter every sign string of the width by
// the band conditions.
inline int count_blocks_brute(int m, int width, bool full_only) {
    if (width % 2 != 0 || width < 0) return 0;
    int count = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << width); ++x) {
        int level = 0, lo = 0;
        bool ok = true;
        for (int i = 0; i < width && ok; ++i) {
            level += (x & (uint64_t{1} << i)) ? +1 : -1;
            lo = std::min(lo, level);
            ok = level <= 0 && level >= -m;
        }
        if (ok && level == 0 && (!full_only || lo == -m)) ++count;
    }
    return count;
}

}  // namespace testutil
