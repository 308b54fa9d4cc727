#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pkmlab/bigint.hpp"
#include "pkmlab/bytes.hpp"
#include "pkmlab/rng.hpp"
#include "pkmlab/sha256.hpp"

namespace pkmlab {

// Raised when a peer-supplied value violates a handshake precondition.
// Sessions catch this and turn it into a rejection verdict.
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Diffie-Hellman
// ---------------------------------------------------------------------------

struct DhGroup {
    Bigint q;  // prime modulus
    Bigint g;  // generator, 1 < g < q, subgroup order > 2

    // Throws std::domain_error if the parameters violate the invariants.
    void validate() const;

    bool operator==(const DhGroup&) const = default;
};

// Built-in desk-scale group (q=23, g=5, primitive root).
DhGroup dh_group_small();

// Built-in 512-bit safe-prime group for the realistic profile.
DhGroup dh_group_realistic();

// Parses a two-line fixture file: decimal q on the first line, g on the second.
DhGroup load_dh_group(const std::string& path);

struct DhKeyPair {
    Bigint x_private;  // exponent in [2, q-2] (tests may force smaller)
    Bigint y_public;   // g^x mod q

    static DhKeyPair from_exponent(const DhGroup& group, const Bigint& x);
};

DhKeyPair gen_dh_keypair(const DhGroup& group, SeededRng& rng);

struct AuthorizationKey {
    Bigint value;

    bool operator==(const AuthorizationKey&) const = default;
};

// AK = peer_public ^ own_x mod q. Rejects peer values outside (1, q).
AuthorizationKey derive_ak(const DhKeyPair& own, const Bigint& peer_public,
                           const DhGroup& group);

// ---------------------------------------------------------------------------
// Nonces, hashing, bind tags
// ---------------------------------------------------------------------------

struct Nonce {
    std::uint64_t value = 0;

    bool operator==(const Nonce&) const = default;
};

Nonce gen_nonce(SeededRng& rng);

// The proposed protocol's direction separator f: bitwise complement.
// Involution with no fixed points.
Nonce f_transform(Nonce n);

Digest hash_bytes(const Bytes& data);

// H(canonical-int(y) || 8-byte big-endian nonce)
Digest bind_tag(const Bigint& y, Nonce nonce);

// H(8-byte big-endian nonce), the confirmation digest.
Digest confirm_tag(Nonce nonce);

// ---------------------------------------------------------------------------
// Textbook RSA (desk scale -- no padding; a protocol laboratory, not
// production cryptography)
// ---------------------------------------------------------------------------

struct RsaPublicKey {
    Bigint n;
    Bigint e;

    bool operator==(const RsaPublicKey&) const = default;
};

struct PkKeyPair {
    Bigint n;
    Bigint e;
    Bigint d;

    RsaPublicKey public_key() const { return {n, e}; }
};

// Deterministic keypair from the seeded source; modulus ~2*prime_bits wide.
PkKeyPair gen_rsa_keypair(SeededRng& rng, unsigned prime_bits = 160);

Bigint pk_encrypt(const RsaPublicKey& pub, const Bigint& m);
Bigint pk_decrypt(const PkKeyPair& priv, const Bigint& c);

// Hash-then-RSA signature over an arbitrary byte string.
Bigint sign(const PkKeyPair& priv, const Bytes& message);
bool verify_sig(const RsaPublicKey& pub, const Bytes& message, const Bigint& sig);

// ---------------------------------------------------------------------------
// Certificates (simplified, not ASN.1)
// ---------------------------------------------------------------------------

struct Certificate {
    std::string subject_id;
    RsaPublicKey subject_rsa;
    std::optional<Bigint> subject_dh_y;  // optional static DH value
    std::string issuer_id;
    Bigint signature = 0;

    // Canonical encoding of the to-be-signed fields.
    Bytes tbs_bytes() const;
    // Canonical encoding including the signature (for transcript hashing).
    Bytes full_bytes() const;

    bool operator==(const Certificate&) const = default;
};

struct CaPublic {
    std::string id;
    RsaPublicKey key;
};

struct CertAuthority {
    std::string id;
    PkKeyPair key;

    CaPublic public_part() const { return {id, key.public_key()}; }
    // Self-signed certificate identifying the authority itself.
    Certificate self_certificate() const;
};

enum class CertStatus { ok, untrusted_issuer, bad_signature };

Certificate issue_cert(const CertAuthority& ca, const std::string& subject_id,
                       const RsaPublicKey& subject_key,
                       const std::optional<Bigint>& subject_dh_y = std::nullopt);

CertStatus verify_cert(const CaPublic& trusted, const Certificate& cert);

const char* to_string(CertStatus status);

}  // namespace pkmlab
