#pragma once

#include <cstdint>
#include <random>

#include "pkmlab/bigint.hpp"

namespace pkmlab {

// Deterministic random source. Every randomized operation in the library
// takes one of these explicitly; a fixed seed reproduces a run bit for bit.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, upper). upper must be positive.
    Bigint uniform_below(const Bigint& upper);

    // Uniform in [lo, hi] inclusive.
    Bigint uniform_range(const Bigint& lo, const Bigint& hi);

    // Uniform value with exactly `bits` random bits (below 2^bits).
    Bigint random_bits(unsigned bits);

    // Child generator with a seed derived from this one's stream.
    SeededRng fork() { return SeededRng(next_u64()); }

private:
    std::mt19937_64 gen_;
};

}  // namespace pkmlab
