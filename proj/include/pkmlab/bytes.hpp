#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pkmlab/bigint.hpp"

namespace pkmlab {

using Bytes = std::vector<std::uint8_t>;

void append_be32(Bytes& out, std::uint32_t v);
void append_be64(Bytes& out, std::uint64_t v);

// Canonical field encoding: 4-byte big-endian length, then the payload.
// Multi-field structures concatenate their fields in declaration order.
void append_field(Bytes& out, const Bytes& payload);
void append_field(Bytes& out, const std::string& payload);

// Big-endian magnitude bytes of a non-negative integer (empty for zero),
// wrapped as a length-prefixed field.
void append_int_field(Bytes& out, const Bigint& v);

Bytes int_magnitude(const Bigint& v);
Bigint int_from_magnitude(const Bytes& bytes);

std::string to_hex(const Bytes& bytes);

}  // namespace pkmlab
