// Seeded RNG for the generators.  mt19937_64 has a standard-specified
// sequence; the draw helpers avoid std distributions, whose output is
// implementation-defined, so seeded runs are byte-identical everywhere.
#pragma once

#include <cstdint>
#include <random>

namespace tshape::detail {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    bool coin() { return (eng_() >> 63) != 0; }

    // Uniform draw from [0, n); n >= 1.
    uint64_t uniform(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tshape::detail
