// prng.hpp - Deterministic seeded generator for reproducible experiments.
#pragma once

#include <cstdint>

#include "hypercover/rational.hpp"

namespace hypercover {

// SplitMix64. Same output sequence on every platform for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Independent stream for trial `index` under a common seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 seeder(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        return SplitMix64(seeder.next());
    }

    // Uniform draw in [0, parts). Modulo over a full 64-bit draw; the bias is
    // parts / 2^64, far below 2^-60 for the part counts used here.
    int next_part(int parts) { return static_cast<int>(next() % static_cast<std::uint64_t>(parts)); }

    // Bernoulli(p) for exact rational p in [0, 1]: compares a 64-bit draw x
    // against p * 2^64, so p = 0 never fires and p = 1 always does.
    bool bernoulli(const Rational& p) {
        std::uint64_t x = next();
        mpz_class lhs(mpz_class(x) * p.get_den());
        mpz_class rhs(p.get_num());
        rhs <<= 64;
        return lhs < rhs;
    }

private:
    std::uint64_t state_;
};

}  // namespace hypercover
