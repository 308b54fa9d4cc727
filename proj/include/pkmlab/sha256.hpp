#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pkmlab/bigint.hpp"
#include "pkmlab/bytes.hpp"

namespace pkmlab {

// 256-bit digest value with structural equality.
struct Digest {
    std::array<std::uint8_t, 32> bytes{};

    bool operator==(const Digest&) const = default;

    std::string hex() const;
    Bigint as_int() const;
    Bytes as_bytes() const { return Bytes(bytes.begin(), bytes.end()); }
};

// SHA-256 over the given byte string.
Digest sha256(const Bytes& data);

}  // namespace pkmlab
