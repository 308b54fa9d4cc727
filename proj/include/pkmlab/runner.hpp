#pragma once

#include <functional>

#include "pkmlab/session.hpp"

namespace pkmlab {

struct TranscriptEntry {
    std::size_t step = 0;  // 1-based, strictly increasing
    std::string sender;
    std::string receiver;
    ProtocolMessage msg;
};

// Append-only record of everything that crossed the channel.
struct Transcript {
    std::vector<TranscriptEntry> entries;

    // One line per message: step|sender|receiver|variant|field=value,...
    std::string to_text() const;
    std::string to_json() const;
};

// Optional in-transit rewrite, applied when a message is delivered. Receives
// the 1-based step index and the wire message; returns the (possibly
// replaced) message to deliver.
using TamperFn = std::function<ProtocolMessage(std::size_t, const ProtocolMessage&)>;

struct RunResult {
    Transcript transcript;
    std::map<std::string, SessionState> finals;

    Verdict verdict_of(const std::string& name) const;
    Reason reason_of(const std::string& name) const;
    std::optional<Bigint> key_of(const std::string& name) const;
    bool all_accepted() const;
};

// Drives a full run of `protocol` over a reliable in-order channel. The
// convenience wrappers below are folds of advance() over exactly this pump.
RunResult run_protocol(Protocol protocol, const World& world, std::uint64_t seed,
                       const TamperFn& tamper = nullptr);

RunResult pkmv1_run(const World& world, std::uint64_t seed);
RunResult pkmv2_run(const World& world, std::uint64_t seed);
RunResult eap_tls_run(const World& world, std::uint64_t seed);
RunResult dh_proposed_run(const World& world, std::uint64_t seed);
RunResult dh_bare_run(const World& world, std::uint64_t seed);

}  // namespace pkmlab
