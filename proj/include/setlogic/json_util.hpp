#pragma once

// Canonical JSON forms shared by witnesses, file formats, and the CLI.

#include "json.hpp"
#include "setlogic/sets.hpp"

namespace setlogic {

using Json = nlohmann::ordered_json;

// Events serialize as the list of member world names in universe order.
inline Json event_to_json(const Event& e) { return Json(e.names()); }

inline Json fincof_to_json(const FinCofEvent& e) {
    Json j;
    j["kind"] = e.is_finite() ? "finite" : "cofinite";
    j["support"] = e.support();
    return j;
}

Event event_from_json(const Universe& u, const Json& j);
FinCofEvent fincof_from_json(const Json& j);

}  // namespace setlogic
