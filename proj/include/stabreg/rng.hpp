#pragma once

#include <cstdint>

#include "stabreg/rational.hpp"

namespace stabreg {

// Counter-based generator: draw i of a stream is splitmix64(seed ^ mix(i)).
// No library distributions are used anywhere, so generated instances are
// bit-identical across platforms and standard library versions.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t at(std::uint64_t counter) const {
        return splitmix64(seed_ ^ (counter * 0xd1342543de82ef95ull + 0x63d95d6cdf2b1c07ull));
    }

    // Uniform in [0, n); n > 0. Modulo bias is irrelevant for instance generation.
    std::uint64_t below(std::uint64_t counter, std::uint64_t n) const {
        return at(counter) % n;
    }

    // Bernoulli with exact rational probability p clamped to [0,1]:
    // include iff draw < floor(p * 2^64).
    bool bernoulli(std::uint64_t counter, const Rat& p) const {
        if (p <= 0) return false;
        if (p >= 1) return true;
        BigInt thr = floor_scaled(p, 64);
        return BigInt(at(counter)) < thr;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

// Stream layout helper: packs up to three small indices into one counter.
inline std::uint64_t rng_key(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    return (a * 0x100000001b3ull + b) * 0x100000001b3ull + c;
}

} // namespace stabreg
