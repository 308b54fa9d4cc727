#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pkmlab {

// Arbitrary-precision integer. All protocol arithmetic is desk scale, so a
// thin alias over GMP keeps value semantics and printable decimal forms.
using Bigint = mpz_class;

inline Bigint bigint_from_dec(const std::string& s) { return Bigint(s, 10); }

inline std::string to_dec(const Bigint& v) { return v.get_str(10); }

// Square-and-multiply modular exponentiation, O(log exponent) multiplications.
Bigint modexp(const Bigint& base, const Bigint& exponent, const Bigint& modulus);

Bigint mod_inverse(const Bigint& value, const Bigint& modulus);

bool probably_prime(const Bigint& n);

Bigint next_prime(const Bigint& n);

}  // namespace pkmlab
