#pragma once

#include "strata/atlas.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace strata {

inline constexpr int kSchemaVersion = 1;

// The checksummed part of the serialization: spec, roots, subsystems,
// classes, both posets and the schema version.  Metadata (tool version,
// conventions, timestamp) lives next to it, outside the checksum.
nlohmann::json atlas_payload_json(const Atlas& atlas);

std::string atlas_checksum(const Atlas& atlas);

nlohmann::json atlas_to_json(const Atlas& atlas);
std::string atlas_to_json_string(const Atlas& atlas);

// Rebuilds the root system from the spec string and validates the stored
// roots and checksum against it.  Throws IoError on malformed input.
Atlas atlas_from_json(const nlohmann::json& j);
Atlas atlas_from_json_string(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace strata
