#include "pkmlab/session.hpp"

namespace pkmlab {

std::optional<Protocol> protocol_from_string(const std::string& name) {
    if (name == "pkmv1") return Protocol::pkmv1;
    if (name == "pkmv2") return Protocol::pkmv2;
    if (name == "eap") return Protocol::eap;
    if (name == "dh-proposed") return Protocol::dh_proposed;
    if (name == "dh-bare") return Protocol::dh_bare;
    return std::nullopt;
}

const char* to_string(Protocol p) {
    switch (p) {
        case Protocol::pkmv1: return "pkmv1";
        case Protocol::pkmv2: return "pkmv2";
        case Protocol::eap: return "eap";
        case Protocol::dh_proposed: return "dh-proposed";
        case Protocol::dh_bare: return "dh-bare";
    }
    return "?";
}

const char* to_string(Role r) {
    switch (r) {
        case Role::subscriber: return "subscriber";
        case Role::base_station: return "base-station";
        case Role::authenticator: return "authenticator";
        case Role::auth_server: return "auth-server";
        case Role::certificate_authority: return "ca";
        case Role::attacker: return "attacker";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::in_progress: return "in-progress";
        case Verdict::accepted: return "accepted";
        case Verdict::rejected: return "rejected";
    }
    return "?";
}

const char* to_string(Reason r) {
    switch (r) {
        case Reason::none: return "none";
        case Reason::decode: return "decode";
        case Reason::cert: return "cert";
        case Reason::advisory_cert: return "advisory-cert";
        case Reason::signature: return "signature";
        case Reason::liveness: return "liveness";
        case Reason::integrity: return "integrity";
        case Reason::binding: return "binding";
        case Reason::confirm: return "confirm";
        case Reason::denied: return "denied";
        case Reason::out_of_order: return "out-of-order";
    }
    return "?";
}

World make_world(std::uint64_t seed, const DhGroup& group) {
    SeededRng root(seed);
    SeededRng ca_rng = root.fork();
    SeededRng rogue_rng = root.fork();
    SeededRng ss_rng = root.fork();
    SeededRng bs_rng = root.fork();
    SeededRng ap_rng = root.fork();
    SeededRng as_rng = root.fork();

    World w;
    w.group = group;
    w.ca = CertAuthority{"TestCA", gen_rsa_keypair(ca_rng)};
    w.rogue_ca = CertAuthority{"RogueCA", gen_rsa_keypair(rogue_rng)};

    auto make_principal = [&](Role role, const std::string& name, SeededRng& rng) {
        Principal p;
        p.id = PrincipalId{role, name, rng.next_u64() & 0xffffffffffffULL};
        p.rsa = gen_rsa_keypair(rng);
        p.cert = issue_cert(w.ca, name, p.rsa.public_key());
        return p;
    };
    w.ss = make_principal(Role::subscriber, "MS", ss_rng);
    w.bs = make_principal(Role::base_station, "BS", bs_rng);
    w.ap = make_principal(Role::authenticator, "AP", ap_rng);
    w.as = make_principal(Role::auth_server, "AS", as_rng);
    return w;
}

namespace {

// Phase labels, per protocol and role.
enum {
    kStart = 0,
    kSsWaitReply = 1,
    kMsWaitM2 = 1,
    kMsWaitBareB = 1,
    kSupWaitIdReq = 0,
    kSupWaitServerCert = 1,
    kBsWaitInfo = 0,
    kBsWaitRequest = 1,
    kBsWaitAck = 2,
    kBsWaitM1 = 0,
    kBsWaitM3 = 1,
    kBsWaitM4 = 2,
    kBsWaitBareA = 0,
    kApWaitIdResp = 1,
    kApWaitResult = 2,
    kAsWaitAccessReq = 0,
    kAsWaitClientCert = 1,
    kDone = 9,
};

StepResult reject(SessionState s, Reason why) {
    s.verdict = Verdict::rejected;
    s.reason = why;
    s.phase = kDone;
    return {std::move(s), {}};
}

StepResult accept(SessionState s, std::vector<Outbound> out = {}) {
    s.verdict = Verdict::accepted;
    s.reason = Reason::none;
    s.phase = kDone;
    return {std::move(s), std::move(out)};
}

bool check_peer_cert(SessionState& s, const Certificate& cert) {
    ++s.credential_checks;
    return verify_cert(s.config->trust_anchor, cert) == CertStatus::ok;
}

bool check_peer_sig(SessionState& s, const RsaPublicKey& key, const Bytes& tbs,
                    const Bigint& sig) {
    ++s.credential_checks;
    return verify_sig(key, tbs, sig);
}

// The manufacturer credential is the issuing authority's own certificate.
bool check_manufacturer(SessionState& s, const Certificate& cert) {
    ++s.credential_checks;
    return cert.subject_id == s.config->trust_anchor.id &&
           verify_cert(s.config->trust_anchor, cert) == CertStatus::ok;
}

std::string peer(const SessionState& s, const char* tag) {
    return s.config->peers.at(tag);
}

// --- PKMv1 -------------------------------------------------------------

StepResult pkmv1_ss(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) {
        if (s.phase != kStart) return reject(std::move(s), Reason::out_of_order);
        // SS pushes the manufacturer certificate and, immediately after it,
        // the authorization request.
        const std::string to = peer(s, "bs");
        std::vector<Outbound> out;
        out.push_back({to, Pkmv1AuthInfo{s.config->manufacturer_cert}});
        out.push_back({to, Pkmv1AuthRequest{s.config->self.cert,
                                            s.config->capabilities, s.config->said}});
        s.phase = kSsWaitReply;
        return {std::move(s), std::move(out)};
    }
    if (s.phase == kSsWaitReply && std::holds_alternative<Pkmv1AuthReply>(*msg)) {
        const auto& reply = std::get<Pkmv1AuthReply>(*msg);
        if (reply.ak_seq > 0x0f || reply.sa_descriptors.empty())
            return reject(std::move(s), Reason::decode);
        Bigint ak;
        try {
            ak = pk_decrypt(s.config->self.rsa, reply.enc_ak);
        } catch (const std::domain_error&) {
            return reject(std::move(s), Reason::decode);
        }
        if (ak >= (Bigint(1) << 160))
            return reject(std::move(s), Reason::decode);
        s.derived_key = ak;
        return accept(std::move(s));
    }
    return reject(std::move(s), Reason::out_of_order);
}

StepResult pkmv1_bs(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) return reject(std::move(s), Reason::out_of_order);
    if (s.phase == kBsWaitInfo && std::holds_alternative<Pkmv1AuthInfo>(*msg)) {
        // Policy check only; 802.16 leaves the consequence to the operator.
        if (!check_manufacturer(s, std::get<Pkmv1AuthInfo>(*msg).manufacturer_cert))
            return reject(std::move(s), Reason::advisory_cert);
        s.phase = kBsWaitRequest;
        return {std::move(s), {}};
    }
    if (s.phase == kBsWaitRequest && std::holds_alternative<Pkmv1AuthRequest>(*msg)) {
        const auto& req = std::get<Pkmv1AuthRequest>(*msg);
        if (!check_peer_cert(s, req.ss_cert))
            return reject(std::move(s), Reason::cert);
        if (req.capabilities.cipher_suites.empty())
            return reject(std::move(s), Reason::decode);
        // BS invents the AK: a 160-bit random value sent under the SS public
        // key taken from the certificate.
        Bigint ak = s.rng.random_bits(160);
        Pkmv1AuthReply reply;
        reply.enc_ak = pk_encrypt(req.ss_cert.subject_rsa, ak);
        reply.ak_lifetime = 3600;
        reply.ak_seq = 1;
        reply.sa_descriptors = {{req.said, req.capabilities.cipher_suites.front()}};
        s.derived_key = ak;
        std::vector<Outbound> out;
        out.push_back({peer(s, "ss"), reply});
        return accept(std::move(s), std::move(out));
    }
    return reject(std::move(s), Reason::out_of_order);
}

// --- PKMv2 RSA ---------------------------------------------------------

StepResult pkmv2_ss(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) {
        if (s.phase != kStart) return reject(std::move(s), Reason::out_of_order);
        s.n_s = gen_nonce(s.rng);
        Pkmv2AuthRequest req;
        req.ss_cert = s.config->self.cert;
        req.n_s = *s.n_s;
        req.capabilities = s.config->capabilities;
        req.said = s.config->said;
        req.ss_signature = sign(s.config->self.rsa, pkmv2_request_tbs(req));
        const std::string to = peer(s, "bs");
        std::vector<Outbound> out;
        out.push_back({to, Pkmv2AuthInfo{s.config->manufacturer_cert}});
        out.push_back({to, req});
        s.phase = kSsWaitReply;
        return {std::move(s), std::move(out)};
    }
    if (s.phase == kSsWaitReply && std::holds_alternative<Pkmv2AuthReply>(*msg)) {
        const auto& reply = std::get<Pkmv2AuthReply>(*msg);
        // Liveness first: the reply must echo the N_s this session sent.
        if (!s.n_s || reply.n_s != *s.n_s)
            return reject(std::move(s), Reason::liveness);
        if (!check_peer_cert(s, reply.bs_cert))
            return reject(std::move(s), Reason::cert);
        if (!check_peer_sig(s, reply.bs_cert.subject_rsa, pkmv2_reply_tbs(reply),
                            reply.bs_signature))
            return reject(std::move(s), Reason::signature);
        if (reply.prepak_seq > 0x0f || reply.said_list.empty())
            return reject(std::move(s), Reason::decode);
        Bigint prepak;
        try {
            prepak = pk_decrypt(s.config->self.rsa, reply.enc_prepak);
        } catch (const std::domain_error&) {
            return reject(std::move(s), Reason::decode);
        }
        if (prepak >= (Bigint(1) << 256))
            return reject(std::move(s), Reason::decode);
        s.derived_key = prepak;
        Pkmv2AuthAck ack;
        ack.n_b = reply.n_b;
        ack.ss_mac = s.config->self.id.mac_address;
        ack.checksum = pkmv2_ack_checksum(prepak, reply.n_b, ack.ss_mac);
        std::vector<Outbound> out;
        out.push_back({peer(s, "bs"), ack});
        return accept(std::move(s), std::move(out));
    }
    return reject(std::move(s), Reason::out_of_order);
}

StepResult pkmv2_bs(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) return reject(std::move(s), Reason::out_of_order);
    if (s.phase == kBsWaitInfo && std::holds_alternative<Pkmv2AuthInfo>(*msg)) {
        if (!check_manufacturer(s, std::get<Pkmv2AuthInfo>(*msg).manufacturer_cert))
            return reject(std::move(s), Reason::advisory_cert);
        s.phase = kBsWaitRequest;
        return {std::move(s), {}};
    }
    if (s.phase == kBsWaitRequest && std::holds_alternative<Pkmv2AuthRequest>(*msg)) {
        const auto& req = std::get<Pkmv2AuthRequest>(*msg);
        if (!check_peer_cert(s, req.ss_cert))
            return reject(std::move(s), Reason::cert);
        if (!check_peer_sig(s, req.ss_cert.subject_rsa, pkmv2_request_tbs(req),
                            req.ss_signature))
            return reject(std::move(s), Reason::signature);
        if (req.capabilities.cipher_suites.empty())
            return reject(std::move(s), Reason::decode);
        s.n_b = gen_nonce(s.rng);
        Bigint prepak = s.rng.random_bits(256);
        s.derived_key = prepak;
        s.peer_rsa = req.ss_cert.subject_rsa;
        Pkmv2AuthReply reply;
        reply.n_s = req.n_s;
        reply.n_b = *s.n_b;
        reply.enc_prepak = pk_encrypt(req.ss_cert.subject_rsa, prepak);
        reply.prepak_lifetime = 3600;
        reply.prepak_seq = 1;
        reply.said_list = {req.said};
        reply.bs_cert = s.config->self.cert;
        reply.bs_signature = sign(s.config->self.rsa, pkmv2_reply_tbs(reply));
        s.phase = kBsWaitAck;
        std::vector<Outbound> out;
        out.push_back({peer(s, "ss"), reply});
        return {std::move(s), std::move(out)};
    }
    if (s.phase == kBsWaitAck && std::holds_alternative<Pkmv2AuthAck>(*msg)) {
        const auto& ack = std::get<Pkmv2AuthAck>(*msg);
        if (!s.n_b || ack.n_b != *s.n_b)
            return reject(std::move(s), Reason::liveness);
        if (ack.checksum != pkmv2_ack_checksum(*s.derived_key, *s.n_b, ack.ss_mac))
            return reject(std::move(s), Reason::integrity);
        return accept(std::move(s));
    }
    return reject(std::move(s), Reason::out_of_order);
}

// --- EAP-TLS (arrow granularity; no key material is derived) ---------------

StepResult eap_authenticator(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) {
        if (s.phase != kStart) return reject(std::move(s), Reason::out_of_order);
        const std::string to = peer(s, "supplicant");
        s.phase = kApWaitIdResp;
        return {std::move(s), {{to, EapIdentityRequest{}}}};
    }
    if (s.phase == kApWaitIdResp && std::holds_alternative<EapIdentityResponse>(*msg)) {
        const auto& resp = std::get<EapIdentityResponse>(*msg);
        s.claimed_identity = resp.identity;
        s.phase = kApWaitResult;
        const std::string to = peer(s, "server");
        return {std::move(s), {{to, RadiusAccessRequest{resp.identity}}}};
    }
    if (s.phase == kApWaitResult && std::holds_alternative<RadiusAccessResult>(*msg)) {
        if (std::get<RadiusAccessResult>(*msg).success)
            return accept(std::move(s));
        return reject(std::move(s), Reason::denied);
    }
    return reject(std::move(s), Reason::out_of_order);
}

StepResult eap_supplicant(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) return reject(std::move(s), Reason::out_of_order);
    if (s.phase == kSupWaitIdReq && std::holds_alternative<EapIdentityRequest>(*msg)) {
        const std::string to = peer(s, "authenticator");
        const std::string identity = s.name();
        s.phase = kSupWaitServerCert;
        return {std::move(s), {{to, EapIdentityResponse{identity}}}};
    }
    if (s.phase == kSupWaitServerCert && std::holds_alternative<EapServerCert>(*msg)) {
        const auto& sc = std::get<EapServerCert>(*msg);
        // The supplicant hands over its certificate only when the server's
        // certificate checks out; otherwise it stops talking.
        if (!check_peer_cert(s, sc.as_cert))
            return reject(std::move(s), Reason::cert);
        if (!sc.cert_request)
            return accept(std::move(s));
        std::vector<Outbound> out;
        out.push_back({peer(s, "server"), EapClientCert{s.config->self.cert}});
        return accept(std::move(s), std::move(out));
    }
    return reject(std::move(s), Reason::out_of_order);
}

StepResult eap_server(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) return reject(std::move(s), Reason::out_of_order);
    if (s.phase == kAsWaitAccessReq && std::holds_alternative<RadiusAccessRequest>(*msg)) {
        s.claimed_identity = std::get<RadiusAccessRequest>(*msg).identity;
        s.phase = kAsWaitClientCert;
        std::vector<Outbound> out;
        out.push_back({peer(s, "supplicant"), EapServerCert{s.config->self.cert, true}});
        return {std::move(s), std::move(out)};
    }
    if (s.phase == kAsWaitClientCert && std::holds_alternative<EapClientCert>(*msg)) {
        const auto& cc = std::get<EapClientCert>(*msg);
        const bool cert_ok = check_peer_cert(s, cc.supplicant_cert);
        const bool identity_ok =
            s.claimed_identity && cc.supplicant_cert.subject_id == *s.claimed_identity;
        std::vector<Outbound> out;
        out.push_back({peer(s, "authenticator"),
                       RadiusAccessResult{cert_ok && identity_ok}});
        if (cert_ok && identity_ok)
            return accept(std::move(s), std::move(out));
        StepResult r = reject(std::move(s), cert_ok ? Reason::integrity : Reason::cert);
        r.outgoing = std::move(out);
        return r;
    }
    return reject(std::move(s), Reason::out_of_order);
}

// --- Proposed Diffie-Hellman handshake --------------------------------------

StepResult dh_ms(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) {
        if (s.phase != kStart) return reject(std::move(s), Reason::out_of_order);
        const std::string to = peer(s, "bs");
        const Certificate cert = s.config->self.cert;
        s.phase = kMsWaitM2;
        return {std::move(s), {{to, DhM1{cert}}}};
    }
    if (s.phase == kMsWaitM2 && std::holds_alternative<DhM2>(*msg)) {
        const auto& m2 = std::get<DhM2>(*msg);
        if (!check_peer_cert(s, m2.bs_cert))
            return reject(std::move(s), Reason::cert);
        if (m2.y_bs <= 1 || m2.y_bs >= s.config->group.q)
            return reject(std::move(s), Reason::decode);
        Bigint nonce_int;
        try {
            nonce_int = pk_decrypt(s.config->self.rsa, m2.enc_nonce);
        } catch (const std::domain_error&) {
            return reject(std::move(s), Reason::decode);
        }
        if (nonce_int >= (Bigint(1) << 64))
            return reject(std::move(s), Reason::decode);
        const Nonce nonce{static_cast<std::uint64_t>(nonce_int.get_ui())};
        // Recompute the hash binding of M2; a mismatch interrupts the run.
        if (bind_tag(m2.y_bs, f_transform(nonce)) != m2.tag_b)
            return reject(std::move(s), Reason::binding);
        s.dh_nonce = nonce;
        s.dh_keys = gen_dh_keypair(s.config->group, s.rng);
        s.peer_dh_public = m2.y_bs;
        s.derived_key = derive_ak(*s.dh_keys, m2.y_bs, s.config->group).value;
        std::vector<Outbound> out;
        const std::string to = peer(s, "bs");
        out.push_back({to, DhM3{s.dh_keys->y_public, bind_tag(s.dh_keys->y_public, nonce)}});
        out.push_back({to, DhM4{confirm_tag(nonce)}});
        return accept(std::move(s), std::move(out));
    }
    return reject(std::move(s), Reason::out_of_order);
}

StepResult dh_bs(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) return reject(std::move(s), Reason::out_of_order);
    if (s.phase == kBsWaitM1 && std::holds_alternative<DhM1>(*msg)) {
        const auto& m1 = std::get<DhM1>(*msg);
        if (!check_peer_cert(s, m1.ms_cert))
            return reject(std::move(s), Reason::cert);
        s.dh_nonce = gen_nonce(s.rng);
        s.dh_keys = gen_dh_keypair(s.config->group, s.rng);
        s.peer_rsa = m1.ms_cert.subject_rsa;
        DhM2 m2;
        m2.bs_cert = s.config->self.cert;
        m2.y_bs = s.dh_keys->y_public;
        m2.enc_nonce = pk_encrypt(m1.ms_cert.subject_rsa, Bigint(s.dh_nonce->value));
        m2.tag_b = bind_tag(m2.y_bs, f_transform(*s.dh_nonce));
        s.phase = kBsWaitM3;
        std::vector<Outbound> out;
        out.push_back({peer(s, "ms"), m2});
        return {std::move(s), std::move(out)};
    }
    if (s.phase == kBsWaitM3 && std::holds_alternative<DhM3>(*msg)) {
        const auto& m3 = std::get<DhM3>(*msg);
        if (m3.y_ms <= 1 || m3.y_ms >= s.config->group.q)
            return reject(std::move(s), Reason::decode);
        if (bind_tag(m3.y_ms, *s.dh_nonce) != m3.tag_m)
            return reject(std::move(s), Reason::binding);
        s.peer_dh_public = m3.y_ms;
        s.phase = kBsWaitM4;
        return {std::move(s), {}};
    }
    if (s.phase == kBsWaitM4 && std::holds_alternative<DhM4>(*msg)) {
        if (std::get<DhM4>(*msg).confirm != confirm_tag(*s.dh_nonce))
            return reject(std::move(s), Reason::confirm);
        s.derived_key = derive_ak(*s.dh_keys, *s.peer_dh_public, s.config->group).value;
        return accept(std::move(s));
    }
    return reject(std::move(s), Reason::out_of_order);
}

// --- Anonymous DH baseline ---------------------------------------------------

StepResult bare_ms(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) {
        if (s.phase != kStart) return reject(std::move(s), Reason::out_of_order);
        s.dh_keys = gen_dh_keypair(s.config->group, s.rng);
        const Bigint y = s.dh_keys->y_public;
        const std::string to = peer(s, "bs");
        s.phase = kMsWaitBareB;
        return {std::move(s), {{to, BareDhA{y}}}};
    }
    if (s.phase == kMsWaitBareB && std::holds_alternative<BareDhB>(*msg)) {
        try {
            s.derived_key =
                derive_ak(*s.dh_keys, std::get<BareDhB>(*msg).y, s.config->group).value;
        } catch (const ProtocolError&) {
            return reject(std::move(s), Reason::decode);
        }
        return accept(std::move(s));
    }
    return reject(std::move(s), Reason::out_of_order);
}

StepResult bare_bs(SessionState s, const std::optional<ProtocolMessage>& msg) {
    if (!msg) return reject(std::move(s), Reason::out_of_order);
    if (s.phase == kBsWaitBareA && std::holds_alternative<BareDhA>(*msg)) {
        s.dh_keys = gen_dh_keypair(s.config->group, s.rng);
        try {
            s.derived_key =
                derive_ak(*s.dh_keys, std::get<BareDhA>(*msg).y, s.config->group).value;
        } catch (const ProtocolError&) {
            return reject(std::move(s), Reason::decode);
        }
        std::vector<Outbound> out;
        out.push_back({peer(s, "ms"), BareDhB{s.dh_keys->y_public}});
        return accept(std::move(s), std::move(out));
    }
    return reject(std::move(s), Reason::out_of_order);
}

}  // namespace

StepResult advance(const SessionState& session,
                   const std::optional<ProtocolMessage>& incoming) {
    // Terminal states absorb: any further traffic is out of order.
    if (session.verdict != Verdict::in_progress) {
        SessionState s = session;
        s.verdict = Verdict::rejected;
        s.reason = Reason::out_of_order;
        return {std::move(s), {}};
    }

    switch (session.config->protocol) {
        case Protocol::pkmv1:
            return session.config->self.id.role == Role::subscriber
                       ? pkmv1_ss(session, incoming)
                       : pkmv1_bs(session, incoming);
        case Protocol::pkmv2:
            return session.config->self.id.role == Role::subscriber
                       ? pkmv2_ss(session, incoming)
                       : pkmv2_bs(session, incoming);
        case Protocol::eap:
            switch (session.config->self.id.role) {
                case Role::subscriber: return eap_supplicant(session, incoming);
                case Role::authenticator: return eap_authenticator(session, incoming);
                default: return eap_server(session, incoming);
            }
        case Protocol::dh_proposed:
            return session.config->self.id.role == Role::subscriber
                       ? dh_ms(session, incoming)
                       : dh_bs(session, incoming);
        case Protocol::dh_bare:
            return session.config->self.id.role == Role::subscriber
                       ? bare_ms(session, incoming)
                       : bare_bs(session, incoming);
    }
    throw std::logic_error("advance: unknown protocol");
}

SessionSet make_sessions(Protocol protocol, const World& world, std::uint64_t seed) {
    SeededRng root(seed);
    const SecurityCapabilities caps{{"aes128-ccm", "des56-cbc"}};
    const std::uint16_t said = 0x0101;

    auto make = [&](const Principal& self,
                    std::map<std::string, std::string> peers) {
        auto cfg = std::make_shared<SessionConfig>();
        cfg->protocol = protocol;
        cfg->self = self;
        cfg->trust_anchor = world.ca.public_part();
        cfg->manufacturer_cert = world.ca.self_certificate();
        cfg->group = world.group;
        cfg->peers = std::move(peers);
        cfg->capabilities = caps;
        cfg->said = said;
        SessionState s;
        s.config = cfg;
        s.rng = root.fork();
        return s;
    };

    SessionSet set;
    switch (protocol) {
        case Protocol::pkmv1:
        case Protocol::pkmv2:
            set.sessions.emplace(world.ss.id.name,
                                 make(world.ss, {{"bs", world.bs.id.name}}));
            set.sessions.emplace(world.bs.id.name,
                                 make(world.bs, {{"ss", world.ss.id.name}}));
            set.initiator = world.ss.id.name;
            break;
        case Protocol::eap:
            set.sessions.emplace(world.ap.id.name,
                                 make(world.ap, {{"supplicant", world.ss.id.name},
                                                 {"server", world.as.id.name}}));
            set.sessions.emplace(world.ss.id.name,
                                 make(world.ss, {{"authenticator", world.ap.id.name},
                                                 {"server", world.as.id.name}}));
            set.sessions.emplace(world.as.id.name,
                                 make(world.as, {{"authenticator", world.ap.id.name},
                                                 {"supplicant", world.ss.id.name}}));
            set.initiator = world.ap.id.name;
            break;
        case Protocol::dh_proposed:
        case Protocol::dh_bare:
            set.sessions.emplace(world.ss.id.name,
                                 make(world.ss, {{"bs", world.bs.id.name}}));
            set.sessions.emplace(world.bs.id.name,
                                 make(world.bs, {{"ms", world.ss.id.name}}));
            set.initiator = world.ss.id.name;
            break;
    }
    return set;
}

}  // namespace pkmlab
