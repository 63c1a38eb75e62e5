#pragma once

// JSON schemas:
//   invariant:      {"components":[{"name":s,"poly":{"<exp>":int}}],
//                    "pairs":[{"a":s,"b":s,"coeff":int}],
//                    "linking":[{"a":s,"b":s,"diff":int}]}
//   filamentation:  {"mono":[s,...],"bi":[[s,s],...]}, or {"exists":false}
// Objects serialize with sorted keys.

#include <optional>

#include <json.hpp>

#include "flatlink/filament.hpp"
#include "flatlink/invariant.hpp"

namespace flatlink {

nlohmann::json to_json(const LinkInvariant& inv);
LinkInvariant invariant_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::optional<Filamentation>& f);
std::optional<Filamentation> filamentation_from_json(const nlohmann::json& j);

}  // namespace flatlink
