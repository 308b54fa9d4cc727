#pragma once

#include "pkmlab/runner.hpp"

#include <json.hpp>

namespace pkmlab {

nlohmann::json cert_to_json(const Certificate& c);
nlohmann::json message_to_json(const ProtocolMessage& msg);
nlohmann::json transcript_to_json(const Transcript& t);

}  // namespace pkmlab
