#ifndef RACKRS_SERIALIZE_HPP
#define RACKRS_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "rackrs/constructions.hpp"
#include "rackrs/repair.hpp"

namespace rackrs {

/// Coefficients, low degree first.
nlohmann::json element_to_json(const FieldElement& a);

/// {q, l, modulus, zeta}; coefficient lists low degree first.
nlohmann::json field_to_json(const ExtField& field);

/// mode, params, zeta exponent per rack, alpha, and each node's point.
nlohmann::json plan_to_json(const Instance& inst);

nlohmann::json transcript_to_json(const RepairTranscript& transcript);

nlohmann::json bandwidth_to_json(const BandwidthReport& report);

/// One row per symbol: the l base-q digits, space separated.
std::string codeword_to_text(const Codeword& word);

}  // namespace rackrs

#endif
