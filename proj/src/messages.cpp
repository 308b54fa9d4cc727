#include "pkmlab/messages.hpp"

#include <sstream>

namespace pkmlab {

namespace {

std::string render_cert(const Certificate& c) {
    std::ostringstream os;
    os << "cert(subject=" << c.subject_id << ";issuer=" << c.issuer_id
       << ";fp=" << sha256(c.full_bytes()).hex().substr(0, 12) << ")";
    return os.str();
}

std::string render_caps(const SecurityCapabilities& caps) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < caps.cipher_suites.size(); ++i)
        os << (i ? ";" : "") << caps.cipher_suites[i];
    os << "]";
    return os.str();
}

std::string render_sa_list(const std::vector<SaDescriptor>& list) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < list.size(); ++i)
        os << (i ? ";" : "") << list[i].said << ":" << list[i].cipher_suite;
    os << "]";
    return os.str();
}

std::string render_said_list(const std::vector<std::uint16_t>& list) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < list.size(); ++i) os << (i ? ";" : "") << list[i];
    os << "]";
    return os.str();
}

// Flip one byte of the certificate's subject id (or signature when the id is
// empty) so the CA binding breaks.
Certificate perturb_cert(Certificate c, SeededRng& rng) {
    if (!c.subject_id.empty()) {
        std::size_t pos = rng.next_u64() % c.subject_id.size();
        c.subject_id[pos] = static_cast<char>(c.subject_id[pos] ^ 0x01);
    } else {
        c.signature ^= 1;
    }
    return c;
}

Bigint perturb_int(const Bigint& v, SeededRng& rng) {
    Bigint delta = Bigint(static_cast<unsigned long>(rng.next_u64() % 255 + 1));
    return v ^ delta;
}

Nonce perturb_nonce(Nonce n, SeededRng& rng) {
    std::uint64_t delta = rng.next_u64();
    if (delta == 0) delta = 1;
    return Nonce{n.value ^ delta};
}

Digest perturb_digest(Digest d, SeededRng& rng) {
    std::size_t pos = rng.next_u64() % d.bytes.size();
    std::uint8_t delta = static_cast<std::uint8_t>(rng.next_u64() % 255 + 1);
    d.bytes[pos] = static_cast<std::uint8_t>(d.bytes[pos] ^ delta);
    return d;
}

std::string perturb_string(std::string s, SeededRng& rng) {
    if (s.empty()) return "x";
    std::size_t pos = rng.next_u64() % s.size();
    s[pos] = static_cast<char>(s[pos] ^ 0x01);
    return s;
}

}  // namespace

std::string variant_name(const ProtocolMessage& msg) {
    static const char* kNames[] = {
        "Pkmv1AuthInfo", "Pkmv1AuthRequest", "Pkmv1AuthReply", "Pkmv2AuthInfo",
        "Pkmv2AuthRequest", "Pkmv2AuthReply", "Pkmv2AuthAck",
        "EapIdentityRequest", "EapIdentityResponse", "RadiusAccessRequest",
        "EapServerCert", "EapClientCert", "RadiusAccessResult", "DhM1", "DhM2",
        "DhM3", "DhM4", "BareDhA", "BareDhB"};
    return kNames[msg.index()];
}

std::string render_fields(const ProtocolMessage& msg) {
    std::ostringstream os;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Pkmv1AuthInfo>) {
                os << "manufacturer_cert=" << render_cert(m.manufacturer_cert);
            } else if constexpr (std::is_same_v<T, Pkmv1AuthRequest>) {
                os << "ss_cert=" << render_cert(m.ss_cert)
                   << ",capabilities=" << render_caps(m.capabilities)
                   << ",said=" << m.said;
            } else if constexpr (std::is_same_v<T, Pkmv1AuthReply>) {
                os << "enc_ak=" << to_dec(m.enc_ak)
                   << ",ak_lifetime=" << m.ak_lifetime
                   << ",ak_seq=" << static_cast<unsigned>(m.ak_seq)
                   << ",sa_descriptors=" << render_sa_list(m.sa_descriptors);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthInfo>) {
                os << "manufacturer_cert=" << render_cert(m.manufacturer_cert);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthRequest>) {
                os << "ss_cert=" << render_cert(m.ss_cert)
                   << ",n_s=" << m.n_s.value
                   << ",capabilities=" << render_caps(m.capabilities)
                   << ",said=" << m.said
                   << ",ss_signature=" << to_dec(m.ss_signature);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthReply>) {
                os << "n_s=" << m.n_s.value << ",n_b=" << m.n_b.value
                   << ",enc_prepak=" << to_dec(m.enc_prepak)
                   << ",prepak_lifetime=" << m.prepak_lifetime
                   << ",prepak_seq=" << static_cast<unsigned>(m.prepak_seq)
                   << ",said_list=" << render_said_list(m.said_list)
                   << ",bs_cert=" << render_cert(m.bs_cert)
                   << ",bs_signature=" << to_dec(m.bs_signature);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthAck>) {
                os << "n_b=" << m.n_b.value << ",ss_mac=" << m.ss_mac
                   << ",checksum=" << m.checksum.hex();
            } else if constexpr (std::is_same_v<T, EapIdentityRequest>) {
                // no fields
            } else if constexpr (std::is_same_v<T, EapIdentityResponse>) {
                os << "identity=" << m.identity;
            } else if constexpr (std::is_same_v<T, RadiusAccessRequest>) {
                os << "identity=" << m.identity;
            } else if constexpr (std::is_same_v<T, EapServerCert>) {
                os << "as_cert=" << render_cert(m.as_cert)
                   << ",cert_request=" << (m.cert_request ? "true" : "false");
            } else if constexpr (std::is_same_v<T, EapClientCert>) {
                os << "supplicant_cert=" << render_cert(m.supplicant_cert);
            } else if constexpr (std::is_same_v<T, RadiusAccessResult>) {
                os << "success=" << (m.success ? "true" : "false");
            } else if constexpr (std::is_same_v<T, DhM1>) {
                os << "ms_cert=" << render_cert(m.ms_cert);
            } else if constexpr (std::is_same_v<T, DhM2>) {
                os << "bs_cert=" << render_cert(m.bs_cert)
                   << ",y_bs=" << to_dec(m.y_bs)
                   << ",enc_nonce=" << to_dec(m.enc_nonce)
                   << ",tag_b=" << m.tag_b.hex();
            } else if constexpr (std::is_same_v<T, DhM3>) {
                os << "y_ms=" << to_dec(m.y_ms) << ",tag_m=" << m.tag_m.hex();
            } else if constexpr (std::is_same_v<T, DhM4>) {
                os << "confirm=" << m.confirm.hex();
            } else if constexpr (std::is_same_v<T, BareDhA>) {
                os << "y=" << to_dec(m.y);
            } else if constexpr (std::is_same_v<T, BareDhB>) {
                os << "y=" << to_dec(m.y);
            }
        },
        msg);
    return os.str();
}

std::size_t field_count(const ProtocolMessage& msg) {
    return std::visit(
        [](const auto& m) -> std::size_t {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Pkmv1AuthInfo>) return 1;
            else if constexpr (std::is_same_v<T, Pkmv1AuthRequest>) return 3;
            else if constexpr (std::is_same_v<T, Pkmv1AuthReply>) return 4;
            else if constexpr (std::is_same_v<T, Pkmv2AuthInfo>) return 1;
            else if constexpr (std::is_same_v<T, Pkmv2AuthRequest>) return 5;
            else if constexpr (std::is_same_v<T, Pkmv2AuthReply>) return 8;
            else if constexpr (std::is_same_v<T, Pkmv2AuthAck>) return 3;
            else if constexpr (std::is_same_v<T, EapIdentityRequest>) return 0;
            else if constexpr (std::is_same_v<T, EapIdentityResponse>) return 1;
            else if constexpr (std::is_same_v<T, RadiusAccessRequest>) return 1;
            else if constexpr (std::is_same_v<T, EapServerCert>) return 2;
            else if constexpr (std::is_same_v<T, EapClientCert>) return 1;
            else if constexpr (std::is_same_v<T, RadiusAccessResult>) return 1;
            else if constexpr (std::is_same_v<T, DhM1>) return 1;
            else if constexpr (std::is_same_v<T, DhM2>) return 4;
            else if constexpr (std::is_same_v<T, DhM3>) return 2;
            else if constexpr (std::is_same_v<T, DhM4>) return 1;
            else return 1;  // BareDhA / BareDhB
        },
        msg);
}

ProtocolMessage mutate_field(const ProtocolMessage& msg, std::size_t index,
                             SeededRng& rng) {
    if (index >= field_count(msg))
        throw std::out_of_range("mutate_field: bad field index");
    ProtocolMessage out = msg;
    std::visit(
        [&](auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Pkmv1AuthInfo>) {
                m.manufacturer_cert = perturb_cert(m.manufacturer_cert, rng);
            } else if constexpr (std::is_same_v<T, Pkmv1AuthRequest>) {
                switch (index) {
                    case 0: m.ss_cert = perturb_cert(m.ss_cert, rng); break;
                    case 1: m.capabilities.cipher_suites.push_back("forged"); break;
                    default: m.said = static_cast<std::uint16_t>(m.said ^ 1);
                }
            } else if constexpr (std::is_same_v<T, Pkmv1AuthReply>) {
                switch (index) {
                    case 0: m.enc_ak = perturb_int(m.enc_ak, rng); break;
                    case 1: m.ak_lifetime ^= 1; break;
                    case 2: m.ak_seq = static_cast<std::uint8_t>((m.ak_seq ^ 1) & 0x0f); break;
                    default:
                        if (m.sa_descriptors.empty())
                            m.sa_descriptors.push_back({9, "forged"});
                        else
                            m.sa_descriptors[0].said ^= 1;
                }
            } else if constexpr (std::is_same_v<T, Pkmv2AuthInfo>) {
                m.manufacturer_cert = perturb_cert(m.manufacturer_cert, rng);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthRequest>) {
                switch (index) {
                    case 0: m.ss_cert = perturb_cert(m.ss_cert, rng); break;
                    case 1: m.n_s = perturb_nonce(m.n_s, rng); break;
                    case 2: m.capabilities.cipher_suites.push_back("forged"); break;
                    case 3: m.said = static_cast<std::uint16_t>(m.said ^ 1); break;
                    default: m.ss_signature = perturb_int(m.ss_signature, rng);
                }
            } else if constexpr (std::is_same_v<T, Pkmv2AuthReply>) {
                switch (index) {
                    case 0: m.n_s = perturb_nonce(m.n_s, rng); break;
                    case 1: m.n_b = perturb_nonce(m.n_b, rng); break;
                    case 2: m.enc_prepak = perturb_int(m.enc_prepak, rng); break;
                    case 3: m.prepak_lifetime ^= 1; break;
                    case 4: m.prepak_seq = static_cast<std::uint8_t>((m.prepak_seq ^ 1) & 0x0f); break;
                    case 5:
                        if (m.said_list.empty()) m.said_list.push_back(9);
                        else m.said_list[0] ^= 1;
                        break;
                    case 6: m.bs_cert = perturb_cert(m.bs_cert, rng); break;
                    default: m.bs_signature = perturb_int(m.bs_signature, rng);
                }
            } else if constexpr (std::is_same_v<T, Pkmv2AuthAck>) {
                switch (index) {
                    case 0: m.n_b = perturb_nonce(m.n_b, rng); break;
                    case 1: m.ss_mac ^= (rng.next_u64() % 0xffffffffffffULL) + 1; break;
                    default: m.checksum = perturb_digest(m.checksum, rng);
                }
            } else if constexpr (std::is_same_v<T, EapIdentityResponse>) {
                m.identity = perturb_string(m.identity, rng);
            } else if constexpr (std::is_same_v<T, RadiusAccessRequest>) {
                m.identity = perturb_string(m.identity, rng);
            } else if constexpr (std::is_same_v<T, EapServerCert>) {
                if (index == 0) m.as_cert = perturb_cert(m.as_cert, rng);
                else m.cert_request = !m.cert_request;
            } else if constexpr (std::is_same_v<T, EapClientCert>) {
                m.supplicant_cert = perturb_cert(m.supplicant_cert, rng);
            } else if constexpr (std::is_same_v<T, RadiusAccessResult>) {
                m.success = !m.success;
            } else if constexpr (std::is_same_v<T, DhM1>) {
                m.ms_cert = perturb_cert(m.ms_cert, rng);
            } else if constexpr (std::is_same_v<T, DhM2>) {
                switch (index) {
                    case 0: m.bs_cert = perturb_cert(m.bs_cert, rng); break;
                    case 1: m.y_bs = perturb_int(m.y_bs, rng); break;
                    case 2: m.enc_nonce = perturb_int(m.enc_nonce, rng); break;
                    default: m.tag_b = perturb_digest(m.tag_b, rng);
                }
            } else if constexpr (std::is_same_v<T, DhM3>) {
                if (index == 0) m.y_ms = perturb_int(m.y_ms, rng);
                else m.tag_m = perturb_digest(m.tag_m, rng);
            } else if constexpr (std::is_same_v<T, DhM4>) {
                m.confirm = perturb_digest(m.confirm, rng);
            } else if constexpr (std::is_same_v<T, BareDhA> || std::is_same_v<T, BareDhB>) {
                m.y = perturb_int(m.y, rng);
            }
        },
        out);
    return out;
}

Bytes pkmv2_request_tbs(const Pkmv2AuthRequest& request) {
    Bytes buf;
    append_field(buf, request.ss_cert.full_bytes());
    append_be64(buf, request.n_s.value);
    append_be32(buf, static_cast<std::uint32_t>(request.capabilities.cipher_suites.size()));
    for (const auto& suite : request.capabilities.cipher_suites)
        append_field(buf, suite);
    append_be32(buf, request.said);
    return buf;
}

Bytes pkmv2_reply_tbs(const Pkmv2AuthReply& reply) {
    Bytes buf;
    append_be64(buf, reply.n_s.value);
    append_be64(buf, reply.n_b.value);
    append_int_field(buf, reply.enc_prepak);
    append_be32(buf, reply.prepak_lifetime);
    buf.push_back(reply.prepak_seq);
    append_be32(buf, static_cast<std::uint32_t>(reply.said_list.size()));
    for (std::uint16_t said : reply.said_list) append_be32(buf, said);
    append_field(buf, reply.bs_cert.full_bytes());
    return buf;
}

Digest pkmv2_ack_checksum(const Bigint& prepak, Nonce n_b, std::uint64_t ss_mac) {
    Bytes buf;
    append_int_field(buf, prepak);
    append_be64(buf, n_b.value);
    append_be64(buf, ss_mac);
    return sha256(buf);
}

}  // namespace pkmlab
