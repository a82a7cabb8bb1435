#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bturan {

// mt19937_64 is fully specified by the standard, so seeded streams are
// reproducible across platforms.  std::uniform_int_distribution is not;
// these helpers replace it.
inline uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) {
    // rejection sampling, negligible loop count for desk-scale bounds
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

// Uniform k-subset of {0,...,m-1} via partial Fisher-Yates.
inline std::vector<int> draw_subset(std::mt19937_64& rng, int m, int k) {
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + int(draw_below(rng, uint64_t(m - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

inline bool draw_bool(std::mt19937_64& rng, double p) {
    return double(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace bturan
