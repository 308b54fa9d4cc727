#include "pkmlab/rng.hpp"

namespace pkmlab {

Bigint SeededRng::uniform_below(const Bigint& upper) {
    if (upper <= 0)
        throw std::domain_error("uniform_below: upper must be positive");
    const std::size_t bits = mpz_sizeinbase(upper.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~0ULL : ((1ULL << top_bits) - 1ULL);
    // Rejection sampling keeps the distribution exactly uniform.
    for (;;) {
        Bigint candidate = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = next_u64();
            if (w == 0) word &= top_mask;
            candidate <<= 64;
            candidate += Bigint(static_cast<unsigned long>(word >> 32)) << 32 |
                         Bigint(static_cast<unsigned long>(word & 0xffffffffULL));
        }
        if (candidate < upper) return candidate;
    }
}

Bigint SeededRng::uniform_range(const Bigint& lo, const Bigint& hi) {
    if (hi < lo)
        throw std::domain_error("uniform_range: empty range");
    return lo + uniform_below(hi - lo + 1);
}

Bigint SeededRng::random_bits(unsigned bits) {
    Bigint upper = Bigint(1) << bits;
    return uniform_below(upper);
}

}  // namespace pkmlab
