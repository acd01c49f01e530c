#pragma once

#include <cstdint>

namespace avdc {

/// splitmix64; deterministic across platforms, unlike <random> distributions.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }
    bool coin() { return next() & 1; }
};

} // namespace avdc
