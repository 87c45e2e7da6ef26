#pragma once

#include <json.hpp>

#include "pellsurf/contfrac.hpp"
#include "pellsurf/pell.hpp"
#include "pellsurf/ramify.hpp"
#include "pellsurf/surfaces.hpp"

namespace pellsurf {

using Json = nlohmann::ordered_json;

/// {status: solved|structural|unknown, reason, x, y, torsion_order, steps_used, ...}
Json verdict_to_json(const SolvabilityVerdict& v, char var = 'u');
/// {kind: vertical|trivial|section, n, x, y, u, definition_field}
Json line_to_json(const AffineLine& line, char var = 't');
Json expansion_to_json(const CFExpansion& e, char var = 'u');
Json ram_profile_to_json(const RamProfile& r, char var = 't');
Json error_to_json(const class Error& e);

const char* verdict_status_name(SolvabilityVerdict::Status s);

}  // namespace pellsurf
