#include "pkmlab/transcript_json.hpp"

namespace pkmlab {

using nlohmann::json;

json cert_to_json(const Certificate& c) {
    json j;
    j["subject_id"] = c.subject_id;
    j["rsa_n"] = to_dec(c.subject_rsa.n);
    j["rsa_e"] = to_dec(c.subject_rsa.e);
    if (c.subject_dh_y) j["dh_y"] = to_dec(*c.subject_dh_y);
    j["issuer_id"] = c.issuer_id;
    j["signature"] = to_dec(c.signature);
    return j;
}

json message_to_json(const ProtocolMessage& msg) {
    json j;
    j["variant"] = variant_name(msg);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Pkmv1AuthInfo> ||
                          std::is_same_v<T, Pkmv2AuthInfo>) {
                j["manufacturer_cert"] = cert_to_json(m.manufacturer_cert);
            } else if constexpr (std::is_same_v<T, Pkmv1AuthRequest>) {
                j["ss_cert"] = cert_to_json(m.ss_cert);
                j["capabilities"] = m.capabilities.cipher_suites;
                j["said"] = m.said;
            } else if constexpr (std::is_same_v<T, Pkmv1AuthReply>) {
                j["enc_ak"] = to_dec(m.enc_ak);
                j["ak_lifetime"] = m.ak_lifetime;
                j["ak_seq"] = m.ak_seq;
                json sa = json::array();
                for (const auto& d : m.sa_descriptors)
                    sa.push_back({{"said", d.said}, {"cipher_suite", d.cipher_suite}});
                j["sa_descriptors"] = sa;
            } else if constexpr (std::is_same_v<T, Pkmv2AuthRequest>) {
                j["ss_cert"] = cert_to_json(m.ss_cert);
                j["n_s"] = m.n_s.value;
                j["capabilities"] = m.capabilities.cipher_suites;
                j["said"] = m.said;
                j["ss_signature"] = to_dec(m.ss_signature);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthReply>) {
                j["n_s"] = m.n_s.value;
                j["n_b"] = m.n_b.value;
                j["enc_prepak"] = to_dec(m.enc_prepak);
                j["prepak_lifetime"] = m.prepak_lifetime;
                j["prepak_seq"] = m.prepak_seq;
                j["said_list"] = m.said_list;
                j["bs_cert"] = cert_to_json(m.bs_cert);
                j["bs_signature"] = to_dec(m.bs_signature);
            } else if constexpr (std::is_same_v<T, Pkmv2AuthAck>) {
                j["n_b"] = m.n_b.value;
                j["ss_mac"] = m.ss_mac;
                j["checksum"] = m.checksum.hex();
            } else if constexpr (std::is_same_v<T, EapIdentityRequest>) {
                // no fields
            } else if constexpr (std::is_same_v<T, EapIdentityResponse> ||
                                 std::is_same_v<T, RadiusAccessRequest>) {
                j["identity"] = m.identity;
            } else if constexpr (std::is_same_v<T, EapServerCert>) {
                j["as_cert"] = cert_to_json(m.as_cert);
                j["cert_request"] = m.cert_request;
            } else if constexpr (std::is_same_v<T, EapClientCert>) {
                j["supplicant_cert"] = cert_to_json(m.supplicant_cert);
            } else if constexpr (std::is_same_v<T, RadiusAccessResult>) {
                j["success"] = m.success;
            } else if constexpr (std::is_same_v<T, DhM1>) {
                j["ms_cert"] = cert_to_json(m.ms_cert);
            } else if constexpr (std::is_same_v<T, DhM2>) {
                j["bs_cert"] = cert_to_json(m.bs_cert);
                j["y_bs"] = to_dec(m.y_bs);
                j["enc_nonce"] = to_dec(m.enc_nonce);
                j["tag_b"] = m.tag_b.hex();
            } else if constexpr (std::is_same_v<T, DhM3>) {
                j["y_ms"] = to_dec(m.y_ms);
                j["tag_m"] = m.tag_m.hex();
            } else if constexpr (std::is_same_v<T, DhM4>) {
                j["confirm"] = m.confirm.hex();
            } else if constexpr (std::is_same_v<T, BareDhA> ||
                                 std::is_same_v<T, BareDhB>) {
                j["y"] = to_dec(m.y);
            }
        },
        msg);
    return j;
}

json transcript_to_json(const Transcript& t) {
    json steps = json::array();
    for (const auto& e : t.entries) {
        json s;
        s["step"] = e.step;
        s["sender"] = e.sender;
        s["receiver"] = e.receiver;
        s["message"] = message_to_json(e.msg);
        steps.push_back(s);
    }
    return json{{"transcript", steps}};
}

std::string Transcript::to_json() const {
    return transcript_to_json(*this).dump(2) + "\n";
}

}  // namespace pkmlab
