#include "pkmlab/bigint.hpp"

namespace pkmlab {

Bigint modexp(const Bigint& base, const Bigint& exponent, const Bigint& modulus) {
    if (modulus <= 1)
        throw std::domain_error("modexp: modulus must be > 1");
    if (exponent < 0)
        throw std::domain_error("modexp: exponent must be non-negative");

    Bigint result = 1;
    Bigint b = base % modulus;
    if (b < 0) b += modulus;
    Bigint e = exponent;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = (result * b) % modulus;
        b = (b * b) % modulus;
        e >>= 1;
    }
    return result;
}

Bigint mod_inverse(const Bigint& value, const Bigint& modulus) {
    Bigint out;
    if (mpz_invert(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: value not invertible");
    return out;
}

bool probably_prime(const Bigint& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Bigint next_prime(const Bigint& n) {
    Bigint out;
    mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

}  // namespace pkmlab
