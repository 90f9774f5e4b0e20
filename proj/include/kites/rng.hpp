#pragma once

#include <cstdint>

namespace kites {

// splitmix64; self-contained so that seeded runs are reproducible across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n must be positive.  Rejection sampling keeps the
    // distribution exact and the output sequence platform-independent.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    int pick(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

private:
    std::uint64_t state_;
};

}  // namespace kites
