#include "pkmlab/runner.hpp"

#include <deque>
#include <sstream>

#include "pkmlab/transcript_json.hpp"

namespace pkmlab {

std::string Transcript::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries)
        os << e.step << "|" << e.sender << "|" << e.receiver << "|"
           << variant_name(e.msg) << "|" << render_fields(e.msg) << "\n";
    return os.str();
}

Verdict RunResult::verdict_of(const std::string& name) const {
    return finals.at(name).verdict;
}

Reason RunResult::reason_of(const std::string& name) const {
    return finals.at(name).reason;
}

std::optional<Bigint> RunResult::key_of(const std::string& name) const {
    return finals.at(name).derived_key;
}

bool RunResult::all_accepted() const {
    for (const auto& [name, s] : finals)
        if (s.verdict != Verdict::accepted) return false;
    return true;
}

RunResult run_protocol(Protocol protocol, const World& world, std::uint64_t seed,
                       const TamperFn& tamper) {
    SessionSet set = make_sessions(protocol, world, seed);

    struct Wire {
        std::string from, to;
        ProtocolMessage msg;
    };
    std::deque<Wire> channel;
    RunResult result;

    auto dispatch = [&](const std::string& from, const std::vector<Outbound>& out) {
        for (const auto& o : out) channel.push_back({from, o.to, o.msg});
    };

    StepResult kick = advance(set.sessions.at(set.initiator), std::nullopt);
    set.sessions.at(set.initiator) = kick.next;
    dispatch(set.initiator, kick.outgoing);

    std::size_t step = 0;
    while (!channel.empty()) {
        Wire wire = channel.front();
        channel.pop_front();
        ++step;
        ProtocolMessage delivered = tamper ? tamper(step, wire.msg) : wire.msg;
        result.transcript.entries.push_back({step, wire.from, wire.to, delivered});
        auto it = set.sessions.find(wire.to);
        if (it == set.sessions.end()) continue;
        StepResult r = advance(it->second, delivered);
        it->second = r.next;
        dispatch(wire.to, r.outgoing);
    }

    result.finals = std::move(set.sessions);
    return result;
}

RunResult pkmv1_run(const World& w, std::uint64_t seed) {
    return run_protocol(Protocol::pkmv1, w, seed);
}
RunResult pkmv2_run(const World& w, std::uint64_t seed) {
    return run_protocol(Protocol::pkmv2, w, seed);
}
RunResult eap_tls_run(const World& w, std::uint64_t seed) {
    return run_protocol(Protocol::eap, w, seed);
}
RunResult dh_proposed_run(const World& w, std::uint64_t seed) {
    return run_protocol(Protocol::dh_proposed, w, seed);
}
RunResult dh_bare_run(const World& w, std::uint64_t seed) {
    return run_protocol(Protocol::dh_bare, w, seed);
}

}  // namespace pkmlab
