#include "pkmlab/crypto.hpp"

#include <fstream>

namespace pkmlab {

// ---------------------------------------------------------------------------
// Diffie-Hellman
// ---------------------------------------------------------------------------

void DhGroup::validate() const {
    if (!probably_prime(q))
        throw std::domain_error("DhGroup: q is not prime");
    if (g <= 1 || g >= q)
        throw std::domain_error("DhGroup: generator out of range");
    // Subgroup order must exceed 2: rule out g^2 == 1 (covers order 1 and 2).
    if (modexp(g, 2, q) == 1)
        throw std::domain_error("DhGroup: generator has order <= 2");
}

DhGroup dh_group_small() { return DhGroup{23, 5}; }

DhGroup dh_group_realistic() {
    static const char* kSafePrime =
        "76917262764477250525576212086807565093928918271381524371968865035532"
        "97903072388482693356660789081840680360449445481048858301844955877392"
        "390503117088485243";
    return DhGroup{bigint_from_dec(kSafePrime), 2};
}

DhGroup load_dh_group(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open DH group fixture: " + path);
    std::string q_line, g_line;
    if (!std::getline(in, q_line) || !std::getline(in, g_line))
        throw std::runtime_error("malformed DH group fixture: " + path);
    DhGroup group{bigint_from_dec(q_line), bigint_from_dec(g_line)};
    group.validate();
    return group;
}

DhKeyPair DhKeyPair::from_exponent(const DhGroup& group, const Bigint& x) {
    return DhKeyPair{x, modexp(group.g, x, group.q)};
}

DhKeyPair gen_dh_keypair(const DhGroup& group, SeededRng& rng) {
    Bigint x = rng.uniform_range(2, group.q - 2);
    return DhKeyPair::from_exponent(group, x);
}

AuthorizationKey derive_ak(const DhKeyPair& own, const Bigint& peer_public,
                           const DhGroup& group) {
    if (peer_public <= 1 || peer_public >= group.q)
        throw ProtocolError("derive_ak: peer public value out of range");
    return AuthorizationKey{modexp(peer_public, own.x_private, group.q)};
}

// ---------------------------------------------------------------------------
// Nonces, hashing, bind tags
// ---------------------------------------------------------------------------

Nonce gen_nonce(SeededRng& rng) { return Nonce{rng.next_u64()}; }

Nonce f_transform(Nonce n) { return Nonce{~n.value}; }

Digest hash_bytes(const Bytes& data) { return sha256(data); }

Digest bind_tag(const Bigint& y, Nonce nonce) {
    Bytes buf;
    append_int_field(buf, y);
    append_be64(buf, nonce.value);
    return sha256(buf);
}

Digest confirm_tag(Nonce nonce) {
    Bytes buf;
    append_be64(buf, nonce.value);
    return sha256(buf);
}

// ---------------------------------------------------------------------------
// Textbook RSA
// ---------------------------------------------------------------------------

PkKeyPair gen_rsa_keypair(SeededRng& rng, unsigned prime_bits) {
    const Bigint e = 65537;
    for (;;) {
        Bigint seed_p = rng.random_bits(prime_bits) | (Bigint(1) << (prime_bits - 1)) | 1;
        Bigint seed_q = rng.random_bits(prime_bits) | (Bigint(1) << (prime_bits - 1)) | 1;
        Bigint p = next_prime(seed_p);
        Bigint q = next_prime(seed_q);
        if (p == q) continue;
        Bigint phi = (p - 1) * (q - 1);
        Bigint gcd;
        mpz_gcd(gcd.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
        if (gcd != 1) continue;
        return PkKeyPair{p * q, e, mod_inverse(e, phi)};
    }
}

Bigint pk_encrypt(const RsaPublicKey& pub, const Bigint& m) {
    if (m < 0 || m >= pub.n)
        throw std::domain_error("pk_encrypt: message out of range");
    return modexp(m, pub.e, pub.n);
}

Bigint pk_decrypt(const PkKeyPair& priv, const Bigint& c) {
    if (c < 0 || c >= priv.n)
        throw std::domain_error("pk_decrypt: ciphertext out of range");
    return modexp(c, priv.d, priv.n);
}

Bigint sign(const PkKeyPair& priv, const Bytes& message) {
    return modexp(sha256(message).as_int(), priv.d, priv.n);
}

bool verify_sig(const RsaPublicKey& pub, const Bytes& message, const Bigint& sig) {
    if (sig < 0 || sig >= pub.n) return false;
    return modexp(sig, pub.e, pub.n) == sha256(message).as_int();
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

Bytes Certificate::tbs_bytes() const {
    Bytes buf;
    append_field(buf, subject_id);
    append_int_field(buf, subject_rsa.n);
    append_int_field(buf, subject_rsa.e);
    append_int_field(buf, subject_dh_y.value_or(0));
    append_field(buf, issuer_id);
    return buf;
}

Bytes Certificate::full_bytes() const {
    Bytes buf = tbs_bytes();
    append_int_field(buf, signature);
    return buf;
}

Certificate CertAuthority::self_certificate() const {
    Certificate cert;
    cert.subject_id = id;
    cert.subject_rsa = key.public_key();
    cert.issuer_id = id;
    cert.signature = sign(key, cert.tbs_bytes());
    return cert;
}

Certificate issue_cert(const CertAuthority& ca, const std::string& subject_id,
                       const RsaPublicKey& subject_key,
                       const std::optional<Bigint>& subject_dh_y) {
    Certificate cert;
    cert.subject_id = subject_id;
    cert.subject_rsa = subject_key;
    cert.subject_dh_y = subject_dh_y;
    cert.issuer_id = ca.id;
    cert.signature = sign(ca.key, cert.tbs_bytes());
    return cert;
}

CertStatus verify_cert(const CaPublic& trusted, const Certificate& cert) {
    if (cert.issuer_id != trusted.id)
        return CertStatus::untrusted_issuer;
    if (!verify_sig(trusted.key, cert.tbs_bytes(), cert.signature))
        return CertStatus::bad_signature;
    return CertStatus::ok;
}

const char* to_string(CertStatus status) {
    switch (status) {
        case CertStatus::ok: return "ok";
        case CertStatus::untrusted_issuer: return "untrusted-issuer";
        case CertStatus::bad_signature: return "bad-signature";
    }
    return "?";
}

}  // namespace pkmlab
