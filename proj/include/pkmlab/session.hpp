#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pkmlab/messages.hpp"

namespace pkmlab {

enum class Protocol { pkmv1, pkmv2, eap, dh_proposed, dh_bare };

std::optional<Protocol> protocol_from_string(const std::string& name);
const char* to_string(Protocol p);

enum class Role {
    subscriber,       // SS / MS / supplicant
    base_station,     // BS / responder
    authenticator,    // EAP access point
    auth_server,      // EAP RADIUS server
    certificate_authority,
    attacker,
};

const char* to_string(Role r);

struct PrincipalId {
    Role role = Role::subscriber;
    std::string name;
    std::uint64_t mac_address = 0;  // 48-bit
};

struct Principal {
    PrincipalId id;
    PkKeyPair rsa;
    Certificate cert;
};

// The fixed cast of a run: one CA (plus an untrusted one for negative cases),
// the client principal, the network-side principals, and the DH group.
struct World {
    CertAuthority ca;
    CertAuthority rogue_ca;
    Principal ss;  // subscriber station / mobile station / supplicant
    Principal bs;  // base station
    Principal ap;  // EAP authenticator
    Principal as;  // EAP authentication server
    DhGroup group;
};

World make_world(std::uint64_t seed, const DhGroup& group = dh_group_small());

enum class Verdict { in_progress, accepted, rejected };

enum class Reason {
    none,
    decode,
    cert,
    advisory_cert,
    signature,
    liveness,
    integrity,
    binding,
    confirm,
    denied,
    out_of_order,
};

const char* to_string(Verdict v);
const char* to_string(Reason r);

// Immutable per-session configuration shared by all states of one session.
struct SessionConfig {
    Protocol protocol;
    Principal self;
    CaPublic trust_anchor;
    Certificate manufacturer_cert;  // the CA's self certificate
    DhGroup group;
    std::map<std::string, std::string> peers;  // role tag -> principal name
    SecurityCapabilities capabilities;
    std::uint16_t said = 0;
};

// Snapshot of one principal's handshake. Values are immutable: advance()
// returns a fresh state and never touches its input.
struct SessionState {
    std::shared_ptr<const SessionConfig> config;
    int phase = 0;
    Verdict verdict = Verdict::in_progress;
    Reason reason = Reason::none;
    SeededRng rng{0};

    // Handshake scratch, populated per protocol as the run progresses.
    std::optional<Nonce> n_s;
    std::optional<Nonce> n_b;
    std::optional<Nonce> dh_nonce;
    std::optional<DhKeyPair> dh_keys;
    std::optional<Bigint> peer_dh_public;
    std::optional<RsaPublicKey> peer_rsa;
    std::optional<std::string> claimed_identity;

    // Established key material (set only on the way to acceptance).
    std::optional<Bigint> derived_key;

    // Number of peer-credential verifications performed so far (certificates
    // and signatures). PKMv1 subscriber sessions must end with zero.
    int credential_checks = 0;

    const std::string& name() const { return config->self.id.name; }
};

struct Outbound {
    std::string to;
    ProtocolMessage msg;
};

struct StepResult {
    SessionState next;
    std::vector<Outbound> outgoing;
};

// Single protocol step: pure transition from (state, optional incoming) to
// (state', outgoing messages). `none` starts an initiator.
StepResult advance(const SessionState& session,
                   const std::optional<ProtocolMessage>& incoming);

// Sessions for one run of `protocol`, keyed by principal name, plus the name
// of the initiator. Session randomness derives from `seed` alone.
struct SessionSet {
    std::map<std::string, SessionState> sessions;
    std::string initiator;
};

SessionSet make_sessions(Protocol protocol, const World& world, std::uint64_t seed);

}  // namespace pkmlab
