#pragma once

#include <json.hpp>

#include "bpir/pir/optimality.hpp"
#include "bpir/pir/params.hpp"

namespace bpir::pir {

// Full public parameter object: integers, the field description string,
// evaluation sets, multipliers, dual bases, minimal and recovery polynomials.
// Elements use the field's "c0:c1:..." format; base polynomials are
// coefficient arrays lowest degree first.
nlohmann::json params_to_json(const SchemeParams& p);

// Rebuilds the parameters from their integers and verifies every published
// table against the rebuilt one. Throws ParseError on any mismatch.
SchemeParams params_from_json(const nlohmann::json& j);

nlohmann::json optimality_to_json(const OptimalityReport& r);

}  // namespace bpir::pir
