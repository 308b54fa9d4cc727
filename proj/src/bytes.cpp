#include "pkmlab/bytes.hpp"

#include <stdexcept>

namespace pkmlab {

void append_be32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void append_be64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void append_field(Bytes& out, const Bytes& payload) {
    append_be32(out, static_cast<std::uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
}

void append_field(Bytes& out, const std::string& payload) {
    append_be32(out, static_cast<std::uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
}

void append_int_field(Bytes& out, const Bigint& v) {
    append_field(out, int_magnitude(v));
}

Bytes int_magnitude(const Bigint& v) {
    if (v < 0)
        throw std::domain_error("int_magnitude: negative value");
    if (v == 0) return {};
    const std::size_t count = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    Bytes out(count);
    std::size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
    out.resize(written);
    return out;
}

Bigint int_from_magnitude(const Bytes& bytes) {
    Bigint out = 0;
    if (!bytes.empty())
        mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return out;
}

std::string to_hex(const Bytes& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace pkmlab
