#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pkmlab/crypto.hpp"

namespace pkmlab {

struct SecurityCapabilities {
    std::vector<std::string> cipher_suites;  // non-empty, preference order

    bool operator==(const SecurityCapabilities&) const = default;
};

struct SaDescriptor {
    std::uint16_t said = 0;
    std::string cipher_suite;

    bool operator==(const SaDescriptor&) const = default;
};

// --- PKMv1 (unilateral, three messages) ------------------------------------

struct Pkmv1AuthInfo {
    Certificate manufacturer_cert;
    bool operator==(const Pkmv1AuthInfo&) const = default;
};

struct Pkmv1AuthRequest {
    Certificate ss_cert;
    SecurityCapabilities capabilities;
    std::uint16_t said = 0;
    bool operator==(const Pkmv1AuthRequest&) const = default;
};

struct Pkmv1AuthReply {
    Bigint enc_ak;              // AK under the SS public key
    std::uint32_t ak_lifetime = 0;  // seconds
    std::uint8_t ak_seq = 0;        // 4-bit
    std::vector<SaDescriptor> sa_descriptors;
    bool operator==(const Pkmv1AuthReply&) const = default;
};

// --- PKMv2 RSA (mutual, four messages) --------------------------------------

struct Pkmv2AuthInfo {
    Certificate manufacturer_cert;
    bool operator==(const Pkmv2AuthInfo&) const = default;
};

struct Pkmv2AuthRequest {
    Certificate ss_cert;
    Nonce n_s;
    SecurityCapabilities capabilities;
    std::uint16_t said = 0;
    Bigint ss_signature;
    bool operator==(const Pkmv2AuthRequest&) const = default;
};

struct Pkmv2AuthReply {
    Nonce n_s;
    Nonce n_b;
    Bigint enc_prepak;               // 256-bit pre-PAK under the SS public key
    std::uint32_t prepak_lifetime = 0;
    std::uint8_t prepak_seq = 0;     // 4-bit
    std::vector<std::uint16_t> said_list;
    Certificate bs_cert;
    Bigint bs_signature;
    bool operator==(const Pkmv2AuthReply&) const = default;
};

struct Pkmv2AuthAck {
    Nonce n_b;
    std::uint64_t ss_mac = 0;  // 48-bit
    Digest checksum;           // keyed by the pre-PAK
    bool operator==(const Pkmv2AuthAck&) const = default;
};

// --- EAP-TLS (six arrows as modeled) ----------------------------------------

struct EapIdentityRequest {
    bool operator==(const EapIdentityRequest&) const = default;
};

struct EapIdentityResponse {
    std::string identity;
    bool operator==(const EapIdentityResponse&) const = default;
};

struct RadiusAccessRequest {
    std::string identity;
    bool operator==(const RadiusAccessRequest&) const = default;
};

struct EapServerCert {
    Certificate as_cert;
    bool cert_request = true;
    bool operator==(const EapServerCert&) const = default;
};

struct EapClientCert {
    Certificate supplicant_cert;
    bool operator==(const EapClientCert&) const = default;
};

struct RadiusAccessResult {
    bool success = false;
    bool operator==(const RadiusAccessResult&) const = default;
};

// --- Proposed Diffie-Hellman handshake (four messages) -----------------------

struct DhM1 {
    Certificate ms_cert;
    bool operator==(const DhM1&) const = default;
};

struct DhM2 {
    Certificate bs_cert;
    Bigint y_bs;
    Bigint enc_nonce;  // nonce under the MS certificate key
    Digest tag_b;      // H(Y_BS || f(nonce))
    bool operator==(const DhM2&) const = default;
};

struct DhM3 {
    Bigint y_ms;
    Digest tag_m;  // H(Y_MS || nonce)
    bool operator==(const DhM3&) const = default;
};

struct DhM4 {
    Digest confirm;  // H(nonce)
    bool operator==(const DhM4&) const = default;
};

// --- Anonymous Diffie-Hellman baseline (not one of the four protocols) ------

struct BareDhA {
    Bigint y;
    bool operator==(const BareDhA&) const = default;
};

struct BareDhB {
    Bigint y;
    bool operator==(const BareDhB&) const = default;
};

using ProtocolMessage =
    std::variant<Pkmv1AuthInfo, Pkmv1AuthRequest, Pkmv1AuthReply, Pkmv2AuthInfo,
                 Pkmv2AuthRequest, Pkmv2AuthReply, Pkmv2AuthAck,
                 EapIdentityRequest, EapIdentityResponse, RadiusAccessRequest,
                 EapServerCert, EapClientCert, RadiusAccessResult, DhM1, DhM2,
                 DhM3, DhM4, BareDhA, BareDhB>;

// Variant name as printed in traces, e.g. "Pkmv2AuthReply".
std::string variant_name(const ProtocolMessage& msg);

// "field=value,..." rendering used by the line trace; values are compact and
// stable (certificates as cert(subject=..;issuer=..), digests as hex).
std::string render_fields(const ProtocolMessage& msg);

// Number of mutable fields of this variant (0 for EapIdentityRequest).
std::size_t field_count(const ProtocolMessage& msg);

// Returns a copy with field `index` replaced by a different value drawn from
// the rng. index must be < field_count(msg).
ProtocolMessage mutate_field(const ProtocolMessage& msg, std::size_t index,
                             SeededRng& rng);

// Canonical bytes of the signed portion of PKMv2 messages.
Bytes pkmv2_request_tbs(const Pkmv2AuthRequest& request);
Bytes pkmv2_reply_tbs(const Pkmv2AuthReply& reply);
// Cryptographic checksum of the ack, keyed by the pre-PAK (prefix form).
Digest pkmv2_ack_checksum(const Bigint& prepak, Nonce n_b, std::uint64_t ss_mac);

}  // namespace pkmlab
